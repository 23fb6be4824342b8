// Command line front end: analyze one group, run the claim verification
// suite over the catalog, or list the catalog.
//
// Exit codes: 0 pass, 1 any failed claim (or failed analysis), 2 usage or
// parse errors.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fgroups/arith.hpp"
#include "fgroups/catalog.hpp"
#include "fgroups/cycles.hpp"
#include "fgroups/errors.hpp"
#include "fgroups/fusion.hpp"
#include "fgroups/group_io.hpp"
#include "fgroups/nilpotency.hpp"
#include "fgroups/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

fg::NamedGroup resolve_group(const std::string& name_or_path) {
  if (auto entry = fg::find_catalog_group(name_or_path)) return std::move(*entry);
  if (std::filesystem::exists(name_or_path)) return fg::load_group(name_or_path);
  throw fg::ParseError("group \"" + name_or_path +
                       "\" is neither a catalog name nor an existing file");
}

fg::FusionClass resolve_class(const std::string& name, unsigned prime) {
  if (name == "cp") return fg::FusionClass::cp(prime);
  if (name == "cyclicp") return fg::FusionClass::cyclic_p(prime);
  if (name == "elemab") return fg::FusionClass::elem_abelian(prime);
  if (name == "psub") return fg::FusionClass::p_subgroups(prime);
  throw fg::ParseError("unknown fusion class \"" + name + "\"");
}

std::string describe_subgroup(const fg::Subgroup& s) {
  std::string out = "order " + std::to_string(s.order()) + ", {";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ", ";
    out += fg::format_cycles(s.parent().element(m));
    first = false;
  }
  return out + "}";
}

int run_analyze(const std::string& group_arg, unsigned prime, const std::string& class_name,
                const std::string& format, bool exhaustive) {
  fg::NamedGroup named = resolve_group(group_arg);
  const fg::FiniteGroup& g = named.group;
  fg::FusionClass cls = resolve_class(class_name, prime);

  fg::Subgroup sylow = fg::sylow_subgroup(g, prime);
  fg::NilpotencyVerdict nil = fg::is_p_nilpotent(g, prime);
  fg::FusionReport fusion = fg::controls_fusion(g, sylow, cls, {.exhaustive = exhaustive});

  if (format == "json") {
    json out;
    out["group"] = named.name;
    out["order"] = g.order();
    out["degree"] = g.degree();
    out["prime"] = prime;
    out["class"] = class_name;
    out["sylow_order"] = sylow.order();
    out["nilpotency"] = json::parse(fg::to_json(nil));
    out["fusion"] = json::parse(fg::to_json(fusion));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "group:        " << named.name << " (order " << g.order() << ", degree "
              << g.degree() << ")\n";
    std::cout << "prime:        " << prime << "\n";
    std::cout << "sylow order:  " << sylow.order() << "\n";
    std::cout << "p-nilpotent:  " << (nil.p_nilpotent ? "yes" : "no");
    if (nil.complement) std::cout << " (complement order " << nil.complement->order() << ")";
    std::cout << "\n";
    std::cout << "class:        " << class_name << "\n";
    std::cout << "condition a:  " << (fusion.condition_a ? "holds" : "violated") << "\n";
    if (fusion.witness_a) {
      std::cout << "  witness A:  " << describe_subgroup(*fusion.witness_a) << "\n";
    }
    std::cout << "condition b:  " << (fusion.condition_b ? "holds" : "violated") << "\n";
    if (fusion.witness_b) {
      std::cout << "  witness A:  " << describe_subgroup(fusion.witness_b->first) << "\n";
      std::cout << "  witness g:  " << fg::format_cycles(fusion.witness_b->second) << "\n";
    }
    std::cout << "checked:      " << fusion.checked_count << "\n";
    std::cout << "controls fusion: " << (fusion.both() ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_verify(std::uint64_t max_order, const std::string& primes_arg,
               const std::optional<std::string>& claim_arg, const std::string& format) {
  std::vector<unsigned> primes;
  std::size_t pos = 0;
  while (pos < primes_arg.size()) {
    std::size_t comma = primes_arg.find(',', pos);
    if (comma == std::string::npos) comma = primes_arg.size();
    std::string token = primes_arg.substr(pos, comma - pos);
    try {
      primes.push_back(static_cast<unsigned>(std::stoul(token)));
    } catch (const std::exception&) {
      throw fg::ParseError("invalid prime \"" + token + "\" in --primes");
    }
    pos = comma + 1;
  }
  std::optional<fg::Claim> filter;
  if (claim_arg) {
    filter = fg::claim_from_string(*claim_arg);
    if (!filter) throw fg::ParseError("unknown claim \"" + *claim_arg + "\"");
  }

  fg::SuiteReport report = fg::run_suite(max_order, primes, filter);
  std::cout << (format == "json" ? report.to_json() + "\n" : report.to_text());
  return fg::exit_code(report);
}

int run_catalog(std::uint64_t max_order, const std::string& format) {
  auto catalog = fg::standard_catalog(max_order);
  if (format == "text") {
    for (const auto& entry : catalog) {
      std::cout << entry.name << "  order " << entry.group.order() << "  degree "
                << entry.group.degree() << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& entry : catalog) {
      arr.push_back(
          {{"name", entry.name}, {"order", entry.group.order()}, {"degree", entry.group.degree()}});
    }
    std::cout << arr.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group fusion control and p-nilpotency toolkit"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "fusion and nilpotency report for one group");
  std::string group_arg;
  unsigned prime = 2;
  std::string class_name = "cp";
  std::string analyze_format = "text";
  bool exhaustive = false;
  analyze->add_option("--group", group_arg, "catalog name or group file path")->required();
  analyze->add_option("--prime", prime, "the prime p")->required();
  analyze->add_option("--class", class_name, "fusion class: cp|cyclicp|elemab|psub")
      ->check(CLI::IsMember({"cp", "cyclicp", "elemab", "psub"}));
  analyze->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--exhaustive", exhaustive,
                    "scan all pairs instead of stopping at the first violation");

  auto* verify = app.add_subcommand("verify", "run the claim suite over the catalog");
  std::uint64_t max_order = 200;
  std::string primes_arg = "2,3,5,7,11,13";
  std::string verify_format = "text";
  std::optional<std::string> claim_arg;
  verify->add_option("--max-order", max_order, "largest catalog group order");
  verify->add_option("--primes", primes_arg, "comma separated primes");
  verify->add_option("--claim", claim_arg,
                     "restrict to one claim (theorem_b, corollary_1, proposition_priddy, "
                     "corollary_priddy, corollary_pcentral, example_quaternion)");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* catalog = app.add_subcommand("catalog", "list the built-in group catalog");
  std::uint64_t catalog_max_order = 400;
  std::string catalog_format = "json";
  bool list_flag = false;
  catalog->add_flag("--list", list_flag, "list catalog entries (default action)");
  catalog->add_option("--max-order", catalog_max_order, "largest group order to list");
  catalog->add_option("--format", catalog_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      if (!fg::is_prime(prime)) {
        std::cerr << "error: --prime " << prime << " is not prime\n";
        return 2;
      }
      return run_analyze(group_arg, prime, class_name, analyze_format, exhaustive);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(max_order, primes_arg, claim_arg, verify_format);
    }
    return run_catalog(catalog_max_order, catalog_format);
  } catch (const fg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fg::NotPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fg::TooLarge& e) {
    // Input outside the engine's caps is a usage problem, not a failed claim.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
