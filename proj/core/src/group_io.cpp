#include "fgroups/group_io.hpp"

#include <fstream>
#include <string>

#include "fgroups/errors.hpp"
#include "serialize.hpp"

namespace fg {

namespace {

[[noreturn]] void parse_fail(std::string_view source, const std::string& what) {
  throw ParseError(std::string(source) + ": " + what);
}

}  // namespace

NamedGroup load_group(std::istream& in, std::string_view source_name) {
  detail::json doc;
  try {
    doc = detail::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(source_name, e.what());
  }
  if (!doc.is_object()) parse_fail(source_name, "expected a JSON object");
  for (const char* field : {"name", "degree", "generators"}) {
    if (!doc.contains(field)) parse_fail(source_name, std::string("missing field \"") + field + '"');
  }
  if (!doc["name"].is_string()) parse_fail(source_name, "field \"name\" must be a string");
  if (!doc["degree"].is_number_unsigned() || doc["degree"].get<std::uint64_t>() == 0) {
    parse_fail(source_name, "field \"degree\" must be a positive integer");
  }
  const auto degree = doc["degree"].get<std::uint64_t>();
  if (degree > 100000) parse_fail(source_name, "field \"degree\" is unreasonably large");
  if (!doc["generators"].is_array() || doc["generators"].empty()) {
    parse_fail(source_name, "field \"generators\" must be a nonempty array");
  }

  std::vector<Permutation> generators;
  std::size_t index = 0;
  for (const auto& gen : doc["generators"]) {
    const std::string where = "generators[" + std::to_string(index) + "]";
    if (!gen.is_array()) parse_fail(source_name, where + " must be an image array");
    if (gen.size() != degree) {
      parse_fail(source_name, where + " has length " + std::to_string(gen.size()) +
                                  ", expected degree " + std::to_string(degree));
    }
    std::vector<unsigned> images;
    std::vector<char> seen(degree, 0);
    for (const auto& value : gen) {
      if (!value.is_number_unsigned()) {
        parse_fail(source_name, where + ": points must be nonnegative integers");
      }
      const auto point = value.get<std::uint64_t>();
      if (point >= degree) {
        parse_fail(source_name,
                   where + ": point " + std::to_string(point) + " out of range");
      }
      if (seen[point]) {
        parse_fail(source_name, where + ": point " + std::to_string(point) + " repeated");
      }
      seen[point] = 1;
      images.push_back(static_cast<unsigned>(point));
    }
    generators.emplace_back(std::move(images));
    ++index;
  }
  return {doc["name"].get<std::string>(),
          FiniteGroup::generate(static_cast<unsigned>(degree), std::move(generators))};
}

NamedGroup load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  return load_group(in, path.string());
}

void save_group(const NamedGroup& g, std::ostream& out) {
  detail::json doc;
  doc["name"] = g.name;
  doc["degree"] = g.group.degree();
  detail::json gens = detail::json::array();
  for (const auto& gen : g.group.generators()) gens.push_back(detail::permutation_json(gen));
  doc["generators"] = std::move(gens);
  out << doc.dump(2) << '\n';
}

void save_group(const NamedGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot open file for writing");
  save_group(g, out);
}

}  // namespace fg
