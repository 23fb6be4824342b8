#pragma once

#include <string>
#include <string_view>

#include "fgroups/permutation.hpp"

namespace fg {

/// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" is the
/// identity. Juxtaposed cycles are composed left to right (leftmost applied
/// first), which is only visible when they are not disjoint.
std::string format_cycles(const Permutation& p);

/// Parses the notation above. Points are whitespace-separated integers in
/// [0, degree). Throws ParseError with a position diagnostic.
Permutation parse_cycles(std::string_view text, unsigned degree);

}  // namespace fg
