#pragma once

// Internal JSON helpers. nlohmann::json stays out of the public headers; the
// public API exposes serialized strings only.

#include <nlohmann/json.hpp>

#include "fgroups/group.hpp"

namespace fg::detail {

using json = nlohmann::ordered_json;

inline json permutation_json(const Permutation& p) {
  json arr = json::array();
  for (unsigned v : p.images()) arr.push_back(v);
  return arr;
}

inline json subgroup_json(const Subgroup& s) {
  json arr = json::array();
  for (int m : s.members()) arr.push_back(permutation_json(s.parent().element(m)));
  return arr;
}

}  // namespace fg::detail
