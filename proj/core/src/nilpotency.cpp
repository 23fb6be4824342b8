#include "fgroups/nilpotency.hpp"

#include <algorithm>
#include <numeric>

#include "fgroups/arith.hpp"
#include "fgroups/errors.hpp"
#include "serialize.hpp"

namespace fg {

namespace {

void require_prime(unsigned p, const char* op) {
  if (!is_prime(p)) throw NotPrime(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

bool is_p_prime_element(const FiniteGroup& g, int x, unsigned p) {
  return g.order_of(x) % p != 0;
}

Subgroup p_prime_closure(const FiniteGroup& g, unsigned p) {
  std::vector<int> seeds;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (is_p_prime_element(g, x, p)) seeds.push_back(x);
  }
  return subgroup_closure(g, std::span<const int>(seeds));
}

// Depth-first subset-sum over the p'-conjugacy classes. Any normal
// p-complement is a union of full p'-classes of total size `target`, so the
// search space is exactly the normal subgroups of that order; the size
// pruning only skips unions that cannot reach it.
bool complement_search(const FiniteGroup& g, const std::vector<std::vector<int>>& classes,
                       std::size_t next, std::size_t current_sum, std::size_t target,
                       std::size_t remaining, std::vector<std::size_t>& chosen,
                       std::vector<int>& result) {
  if (current_sum == target) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> members;
    for (std::size_t c : chosen) {
      for (int m : classes[c]) {
        in[static_cast<std::size_t>(m)] = 1;
        members.push_back(m);
      }
    }
    for (int a : members) {
      for (int b : members) {
        if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
      }
    }
    std::sort(members.begin(), members.end());
    result = std::move(members);
    return true;
  }
  if (next == classes.size() || current_sum + remaining < target) return false;
  std::size_t size = classes[next].size();
  if (current_sum + size <= target) {
    chosen.push_back(next);
    if (complement_search(g, classes, next + 1, current_sum + size, target, remaining - size,
                          chosen, result)) {
      return true;
    }
    chosen.pop_back();
  }
  return complement_search(g, classes, next + 1, current_sum, target, remaining - size, chosen,
                           result);
}

}  // namespace

NilpotencyVerdict is_p_nilpotent(const FiniteGroup& g, unsigned p) {
  require_prime(p, "is_p_nilpotent");
  NilpotencyVerdict verdict;
  verdict.p = p;
  Subgroup k = p_prime_closure(g, p);
  std::size_t target = g.order() / p_part(g.order(), p);
  verdict.p_nilpotent = k.order() == target;
  if (verdict.p_nilpotent) verdict.complement = std::move(k);
  return verdict;
}

std::optional<Subgroup> normal_complement_oracle(const FiniteGroup& g, unsigned p) {
  require_prime(p, "normal_complement_oracle");
  if (g.order() > 400) {
    throw TooLarge("normal_complement_oracle: group order " + std::to_string(g.order()) +
                   " exceeds 400");
  }
  std::size_t target = g.order() / p_part(g.order(), p);
  std::vector<std::vector<int>> classes;
  std::size_t total = 0;
  for (auto& cls : conjugacy_classes(g)) {
    if (is_p_prime_element(g, cls.front(), p)) {
      total += cls.size();
      classes.push_back(std::move(cls));
    }
  }
  // classes[0] is {identity}; it is forced into every candidate.
  std::vector<std::size_t> chosen{0};
  std::vector<int> result;
  if (complement_search(g, classes, 1, 1, target, total - 1, chosen, result)) {
    return Subgroup(g, std::move(result));
  }
  return std::nullopt;
}

NilpotencyVerdict frobenius_criterion(const FiniteGroup& g, unsigned p) {
  require_prime(p, "frobenius_criterion");
  NilpotencyVerdict verdict;
  verdict.p = p;
  verdict.p_nilpotent = true;
  Subgroup sylow = sylow_subgroup(g, p);
  if (sylow.order() == 1) return verdict;
  for (const auto& b : all_subgroups_of_p_group(g, sylow)) {
    if (b.order() == 1) continue;
    Subgroup norm = normalizer(g, b);
    for (int x : norm.members()) {
      if (!is_p_prime_element(g, x, p)) continue;
      for (int m : b.members()) {
        if (g.conj(m, x) != m) {
          verdict.p_nilpotent = false;
          verdict.frobenius_witness = std::make_pair(b, g.element(x));
          return verdict;
        }
      }
    }
  }
  return verdict;
}

CentralSeries upper_central_series(const FiniteGroup& g) {
  CentralSeries series;
  series.terms.push_back(trivial_subgroup(g));
  for (;;) {
    const Subgroup& last = series.terms.back();
    std::vector<int> members;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      bool in_next = true;
      for (int y = 0; y < static_cast<int>(g.order()); ++y) {
        // [x, y] = x^-1 * (x^y)
        if (!last.contains_index(g.mul(g.inv(x), g.conj(x, y)))) {
          in_next = false;
          break;
        }
      }
      if (in_next) members.push_back(x);
    }
    Subgroup next(g, std::move(members));
    bool stable = next.order() == last.order();
    bool full = next.order() == g.order();
    series.terms.push_back(std::move(next));
    if (stable || full) break;
  }
  return series;
}

Subgroup omega_bar(const FiniteGroup& g, unsigned p) {
  require_prime(p, "omega_bar");
  unsigned bound = p_bar(p);
  std::vector<int> seeds;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (bound % g.order_of(x) == 0) seeds.push_back(x);
  }
  return subgroup_closure(g, std::span<const int>(seeds));
}

bool hall_petrescu_consequence(const FiniteGroup& g, unsigned p) {
  require_prime(p, "hall_petrescu_consequence");
  Subgroup k = omega_bar(g, p);

  CentralSeries series = upper_central_series(g);
  std::size_t n = series.terms.size();
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    if (k.is_subset_of(series.terms[i])) {
      n = i;
      break;
    }
  }
  if (n == series.terms.size()) {
    throw HypothesisNotMet("hall_petrescu_consequence: omega_bar subgroup is not hypercentral");
  }

  unsigned exponent = 1;
  for (int m : k.members()) exponent = std::max(exponent, g.order_of(m));
  if (p_part(exponent, p) != exponent) {
    throw HypothesisNotMet("hall_petrescu_consequence: omega_bar subgroup is not a p-group");
  }
  unsigned e = 0;
  for (unsigned q = exponent; q > 1; q /= p) ++e;

  // Check that every g^(p^(e+n)) centralizes K; the exponent is reduced
  // modulo each element order.
  Subgroup cent = centralizer(g, k);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    std::uint64_t reduced = 1;
    for (std::size_t i = 0; i < e + n; ++i) reduced = (reduced * p) % g.order_of(x);
    if (!cent.contains_index(g.pow(x, reduced))) return false;
  }
  return true;
}

std::string to_json(const NilpotencyVerdict& verdict) {
  detail::json j;
  j["p"] = verdict.p;
  j["p_nilpotent"] = verdict.p_nilpotent;
  if (verdict.complement) j["complement_order"] = verdict.complement->order();
  if (verdict.frobenius_witness) {
    j["frobenius_witness"] = {{"subgroup", detail::subgroup_json(verdict.frobenius_witness->first)},
                              {"g", detail::permutation_json(verdict.frobenius_witness->second)}};
  }
  return j.dump();
}

}  // namespace fg
