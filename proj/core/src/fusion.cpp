#include "fgroups/fusion.hpp"

#include <algorithm>
#include <set>

#include "fgroups/arith.hpp"
#include "fgroups/errors.hpp"
#include "serialize.hpp"

namespace fg {

namespace {

void require_prime(unsigned p, const char* op) {
  if (!is_prime(p)) throw NotPrime(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

// Member lists of all cyclic subgroups generated by elements of the given
// order, deduplicated.
std::set<std::vector<int>> cyclic_subgroups_of_order(const FiniteGroup& g, unsigned order) {
  std::set<std::vector<int>> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (g.order_of(x) != order) continue;
    std::vector<int> members;
    int cur = 0;
    do {
      members.push_back(cur);
      cur = g.mul(cur, x);
    } while (cur != 0);
    std::sort(members.begin(), members.end());
    out.insert(std::move(members));
  }
  return out;
}

std::set<std::vector<int>> elem_abelian_subgroups(const FiniteGroup& g, unsigned p) {
  std::vector<int> order_p;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (g.order_of(x) == p) order_p.push_back(x);
  }
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (int x : order_p) {
    std::vector<int> members;
    int cur = 0;
    do {
      members.push_back(cur);
      cur = g.mul(cur, x);
    } while (cur != 0);
    std::sort(members.begin(), members.end());
    if (all.insert(members).second) frontier.push_back(std::move(members));
  }
  // Grow each subgroup by one commuting order-p element at a time; anything
  // abelian generated by order-p elements stays elementary abelian.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& current : frontier) {
      std::vector<char> in(g.order(), 0);
      for (int m : current) in[static_cast<std::size_t>(m)] = 1;
      for (int y : order_p) {
        if (in[static_cast<std::size_t>(y)]) continue;
        bool commutes = true;
        for (int m : current) {
          if (g.mul(m, y) != g.mul(y, m)) {
            commutes = false;
            break;
          }
        }
        if (!commutes) continue;
        std::vector<int> seeds = current;
        seeds.push_back(y);
        std::vector<int> extended = subgroup_closure(g, std::span<const int>(seeds)).members();
        if (all.insert(extended).second) next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

std::set<std::vector<int>> nontrivial_p_subgroups(const FiniteGroup& g, const Subgroup& sylow,
                                                  const std::vector<int>& conjugators) {
  std::set<std::vector<int>> out;
  for (const auto& sub : all_subgroups_of_p_group(g, sylow)) {
    if (sub.order() == 1) continue;
    for (int x : conjugators) {
      std::vector<int> image;
      image.reserve(sub.order());
      for (int m : sub.members()) image.push_back(g.conj(m, x));
      std::sort(image.begin(), image.end());
      out.insert(std::move(image));
    }
  }
  return out;
}

std::vector<Subgroup> to_subgroups(const FiniteGroup& g, const std::set<std::vector<int>>& sets) {
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (const auto& members : sets) out.emplace_back(g, members);
  return out;
}

// Condition (b'): for every class subgroup A <= H and g with A^g <= H, test
// g in C_G(A) * H. Scans run in canonical order, so the first violation found
// is the canonical witness.
void check_condition_b(const FiniteGroup& g, const Subgroup& h,
                       const std::vector<Subgroup>& class_subgroups, const FusionOptions& opts,
                       FusionReport& report) {
  for (const auto& a : class_subgroups) {
    if (!a.is_subset_of(h)) continue;
    Subgroup cent = centralizer(g, a);
    std::vector<char> in_ch(g.order(), 0);
    for (int prod : set_product(cent, h)) in_ch[static_cast<std::size_t>(prod)] = 1;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      bool inside = true;
      for (int m : a.members()) {
        if (!h.contains_index(g.conj(m, x))) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      ++report.checked_count;
      if (!in_ch[static_cast<std::size_t>(x)]) {
        if (report.condition_b) {
          report.condition_b = false;
          report.witness_b = std::make_pair(a, g.element(x));
        }
        if (!opts.exhaustive) return;
      }
    }
  }
}

}  // namespace

FusionClass FusionClass::cyclic_p(unsigned p) {
  require_prime(p, "FusionClass::cyclic_p");
  return {FusionClassKind::CyclicP, p};
}

FusionClass FusionClass::cyclic4() { return {FusionClassKind::Cyclic4, 2}; }

FusionClass FusionClass::cp(unsigned p) {
  require_prime(p, "FusionClass::cp");
  return {FusionClassKind::Cp, p};
}

FusionClass FusionClass::elem_abelian(unsigned p) {
  require_prime(p, "FusionClass::elem_abelian");
  return {FusionClassKind::ElemAbelian, p};
}

FusionClass FusionClass::p_subgroups(unsigned p) {
  require_prime(p, "FusionClass::p_subgroups");
  return {FusionClassKind::PSubgroups, p};
}

std::vector<Subgroup> enumerate_class(const FiniteGroup& g, const FusionClass& cls) {
  switch (cls.kind) {
    case FusionClassKind::CyclicP:
      return to_subgroups(g, cyclic_subgroups_of_order(g, cls.p));
    case FusionClassKind::Cyclic4:
      return to_subgroups(g, cyclic_subgroups_of_order(g, 4));
    case FusionClassKind::Cp: {
      auto sets = cyclic_subgroups_of_order(g, cls.p);
      if (cls.p == 2) sets.merge(cyclic_subgroups_of_order(g, 4));
      return to_subgroups(g, sets);
    }
    case FusionClassKind::ElemAbelian:
      return to_subgroups(g, elem_abelian_subgroups(g, cls.p));
    case FusionClassKind::PSubgroups: {
      Subgroup sylow = sylow_subgroup(g, cls.p);
      if (sylow.order() == 1) return {};
      std::vector<int> everyone = full_subgroup(g).members();
      return to_subgroups(g, nontrivial_p_subgroups(g, sylow, everyone));
    }
  }
  return {};
}

FusionReport controls_fusion(const FiniteGroup& g, const Subgroup& h, const FusionClass& cls,
                             const FusionOptions& opts) {
  if (&h.parent() != &g) throw ParentMismatch("controls_fusion: H is not a subgroup of G");
  FusionReport report;
  std::vector<Subgroup> class_subgroups = enumerate_class(g, cls);

  // Condition (a): every class subgroup has a conjugate inside H.
  for (const auto& a : class_subgroups) {
    ++report.checked_count;
    bool found = false;
    for (int x = 0; x < static_cast<int>(g.order()) && !found; ++x) {
      found = true;
      for (int m : a.members()) {
        if (!h.contains_index(g.conj(m, x))) {
          found = false;
          break;
        }
      }
    }
    if (!found) {
      if (report.condition_a) {
        report.condition_a = false;
        report.witness_a = a;
      }
      if (!opts.exhaustive) break;
    }
  }

  check_condition_b(g, h, class_subgroups, opts, report);
  return report;
}

FusionReport controls_p_fusion(const FiniteGroup& g, const Subgroup& h, unsigned p,
                               const FusionOptions& opts) {
  require_prime(p, "controls_p_fusion");
  if (&h.parent() != &g) throw ParentMismatch("controls_p_fusion: H is not a subgroup of G");
  FusionReport report;

  // (a) reduces to an order test: H absorbs every p-subgroup up to conjugacy
  // iff it contains a full Sylow p-subgroup.
  if (p_part(h.order(), p) != p_part(g.order(), p)) {
    report.condition_a = false;
    report.witness_a = sylow_subgroup(g, p);
  }
  ++report.checked_count;

  // (b') over the nontrivial p-subgroups of H: subgroups of a Sylow
  // p-subgroup of H, closed under H-conjugation.
  Subgroup sylow_h = sylow_subgroup_in(h, p);
  if (sylow_h.order() > 1) {
    auto class_sets = nontrivial_p_subgroups(g, sylow_h, h.members());
    check_condition_b(g, h, to_subgroups(g, class_sets), opts, report);
  }
  return report;
}

std::string to_json(const FusionReport& report) {
  detail::json j;
  j["condition_a"] = report.condition_a;
  j["condition_b"] = report.condition_b;
  if (report.witness_a) {
    j["witness_a"] = {{"subgroup", detail::subgroup_json(*report.witness_a)}};
  }
  if (report.witness_b) {
    j["witness_b"] = {{"subgroup", detail::subgroup_json(report.witness_b->first)},
                      {"g", detail::permutation_json(report.witness_b->second)}};
  }
  j["checked_count"] = report.checked_count;
  return j.dump();
}

}  // namespace fg
