#include "fgroups/cycles.hpp"

#include <cctype>
#include <sstream>

#include "fgroups/errors.hpp"

namespace fg {

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

Permutation parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0) throw ParseError("cycle expression: degree must be positive");
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("cycle expression, offset " + std::to_string(pos) + ": " + what);
  };

  skip_space();
  if (pos == text.size()) throw fail("expected at least one cycle");
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<unsigned> cycle;
    std::vector<char> used(degree, 0);
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a point");
      unsigned long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > degree) break;
        ++pos;
      }
      if (value >= degree) {
        throw fail("point " + std::to_string(value) + " out of range for degree " +
                   std::to_string(degree));
      }
      if (used[value]) throw fail("point " + std::to_string(value) + " repeated in cycle");
      used[value] = 1;
      cycle.push_back(static_cast<unsigned>(value));
      skip_space();
    }
    if (pos == text.size()) throw fail("unterminated cycle");
    ++pos;  // ')'
    saw_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<unsigned> images(degree);
      for (unsigned i = 0; i < degree; ++i) images[i] = i;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      result = compose(result, Permutation(std::move(images)));
    }
    skip_space();
  }
  if (!saw_cycle) throw fail("expected at least one cycle");
  return result;
}

}  // namespace fg
