#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "fgroups/catalog.hpp"

namespace fg {

/// Group file format (JSON):
///   { "name": string, "degree": n, "generators": [[image sequence], ...] }
/// Loading validates every generator as a bijection of the stated degree and
/// reports ParseError with field diagnostics; the group is then closed with
/// FiniteGroup::generate (TooLarge applies).
NamedGroup load_group(std::istream& in, std::string_view source_name = "<stream>");
NamedGroup load_group(const std::filesystem::path& path);

void save_group(const NamedGroup& g, std::ostream& out);
void save_group(const NamedGroup& g, const std::filesystem::path& path);

}  // namespace fg
