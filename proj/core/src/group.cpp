#include "fgroups/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "fgroups/arith.hpp"
#include "fgroups/errors.hpp"

namespace fg {

namespace {

void require_parent(const FiniteGroup& g, const Subgroup& s, const char* op) {
  if (&s.parent() != &g) throw ParentMismatch(std::string(op) + ": subgroup of a different group");
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* op) {
  if (&a.parent() != &b.parent()) {
    throw ParentMismatch(std::string(op) + ": subgroups of different groups");
  }
}

// Closure of a seed under right multiplication, as ascending indices. Seeds
// generate their inverses by finiteness, so one-sided products suffice.
std::vector<int> closure_indices(const FiniteGroup& g, std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members;
  members.reserve(seed.size() + 1);
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  std::vector<int> gens(members.begin() + 1, members.end());
  for (std::size_t w = 0; w < members.size(); ++w) {
    for (int s : gens) add(g.mul(members[w], s));
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> conjugate_indices(const FiniteGroup& g, const std::vector<int>& members, int x) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(g.conj(m, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool conjugates_into(const FiniteGroup& g, const std::vector<int>& members, int x,
                     const Subgroup& target) {
  for (int m : members) {
    if (!target.contains_index(g.conj(m, x))) return false;
  }
  return true;
}

// Sylow p-subgroup of the subgroup spanned by `carrier` (ascending member
// indices of a subgroup of g), via normalizer growing inside the carrier.
std::vector<int> sylow_indices(const FiniteGroup& g, const std::vector<int>& carrier, unsigned p) {
  if (!is_prime(p)) throw NotPrime("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(carrier.size(), p);
  if (target == 1) return {0};

  // Seed with the p-power part of the first member of order divisible by p.
  int seed = -1;
  for (int x : carrier) {
    unsigned ord = g.order_of(x);
    if (ord % p == 0) {
      seed = g.pow(x, ord / static_cast<unsigned>(p_part(ord, p)));
      break;
    }
  }
  std::vector<int> sylow = closure_indices(g, std::span<const int>(&seed, 1));

  while (sylow.size() < target) {
    std::vector<char> in(g.order(), 0);
    for (int m : sylow) in[static_cast<std::size_t>(m)] = 1;
    int extend = -1;
    for (int h : carrier) {
      if (in[static_cast<std::size_t>(h)]) continue;
      unsigned ord = g.order_of(h);
      if (p_part(ord, p) != ord) continue;       // p-element
      if (!in[static_cast<std::size_t>(g.pow(h, p))]) continue;  // coset image of order p
      bool normalizes = true;
      for (int m : sylow) {
        if (!in[static_cast<std::size_t>(g.conj(m, h))]) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) {
        extend = h;
        break;
      }
    }
    if (extend < 0) {
      throw Error("sylow_subgroup: growing step found no extension (carrier not a subgroup?)");
    }
    std::vector<int> next = sylow;
    next.push_back(extend);
    sylow = closure_indices(g, next);
  }
  return sylow;
}

}  // namespace

FiniteGroup FiniteGroup::generate(unsigned degree, std::vector<Permutation> generators) {
  if (degree == 0) throw std::invalid_argument("generate: degree must be positive");
  if (generators.empty()) throw std::invalid_argument("generate: generators must be nonempty");
  for (const auto& gen : generators) {
    if (gen.degree() != degree) {
      throw DegreeMismatch("generate: generator degree " + std::to_string(gen.degree()) +
                           " does not match " + std::to_string(degree));
    }
  }

  std::unordered_set<Permutation, PermHash> seen;
  std::deque<const Permutation*> work;
  auto [it, inserted] = seen.insert(Permutation(degree));
  work.push_back(&*it);
  while (!work.empty()) {
    const Permutation& current = *work.front();
    work.pop_front();
    for (const auto& gen : generators) {
      auto [pos, fresh] = seen.insert(compose(current, gen));
      if (fresh) {
        if (seen.size() > kOrderCap) {
          throw TooLarge("generate: closure exceeds the cap of " + std::to_string(kOrderCap));
        }
        work.push_back(&*pos);
      }
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  g.index_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    g.index_.emplace(g.elements_[i], static_cast<int>(i));
  }
  g.orders_.reserve(g.elements_.size());
  g.inverses_.reserve(g.elements_.size());
  for (const auto& e : g.elements_) {
    g.orders_.push_back(element_order(e));
    g.inverses_.push_back(g.index_.at(inverse(e)));
  }
  return g;
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  return index_.at(compose(elements_[static_cast<std::size_t>(a)],
                           elements_[static_cast<std::size_t>(b)]));
}

int FiniteGroup::conj(int a, int g) const {
  const auto& pa = elements_[static_cast<std::size_t>(a)].images();
  const auto& pg = elements_[static_cast<std::size_t>(g)].images();
  std::vector<unsigned> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[pg[i]] = pg[pa[i]];
  return index_.at(Permutation(std::move(out)));
}

int FiniteGroup::pow(int a, std::uint64_t k) const {
  k %= order_of(a);
  int result = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)), flags_(parent.order(), 0) {
  if (members_.empty() || members_.front() != 0) {
    throw std::invalid_argument("subgroup member list must start with the identity");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    int m = members_[i];
    if (m < 0 || static_cast<std::size_t>(m) >= parent.order() ||
        (i > 0 && m <= members_[i - 1])) {
      throw std::invalid_argument("subgroup member list must be ascending and in range");
    }
    flags_[static_cast<std::size_t>(m)] = 1;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  for (int m : members_) {
    if (!other.contains_index(m)) return false;
  }
  return true;
}

std::vector<Permutation> Subgroup::permutations() const {
  std::vector<Permutation> out;
  out.reserve(members_.size());
  for (int m : members_) out.push_back(parent_->element(m));
  return out;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed) {
  for (int s : seed) {
    if (s < 0 || static_cast<std::size_t>(s) >= g.order()) {
      throw ElementNotInGroup("subgroup_closure: seed index out of range");
    }
  }
  return Subgroup(g, closure_indices(g, seed));
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Permutation>& seed) {
  std::vector<int> indices;
  indices.reserve(seed.size());
  for (const auto& p : seed) {
    int idx = g.index_of(p);
    if (idx < 0) throw ElementNotInGroup("subgroup_closure: seed element not in group");
    indices.push_back(idx);
  }
  return subgroup_closure(g, std::span<const int>(indices));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  require_parent(g, s, "centralizer");
  std::vector<int> members;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool central = true;
    for (int m : s.members()) {
      if (g.conj(m, x) != m) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  require_parent(g, s, "normalizer");
  std::vector<int> members;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (conjugates_into(g, s.members(), x, s)) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, full_subgroup(g)); }

Subgroup center_of(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  std::vector<int> members;
  for (int x : s.members()) {
    bool central = true;
    for (int m : s.members()) {
      if (g.mul(x, m) != g.mul(m, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup conjugate_subgroup(const Subgroup& s, int x) {
  return Subgroup(s.parent(), conjugate_indices(s.parent(), s.members(), x));
}

Subgroup conjugate_subgroup(const Subgroup& s, const Permutation& x) {
  int idx = s.parent().index_of(x);
  if (idx < 0) throw ElementNotInGroup("conjugate_subgroup: conjugator not in parent group");
  return conjugate_subgroup(s, idx);
}

std::optional<Permutation> conjugating_element(const FiniteGroup& g, const Subgroup& a,
                                               const Subgroup& b) {
  require_parent(g, a, "conjugating_element");
  require_parent(g, b, "conjugating_element");
  if (a.order() != b.order()) return std::nullopt;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (conjugates_into(g, a.members(), x, b)) return g.element(x);
  }
  return std::nullopt;
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p) {
  return Subgroup(g, sylow_indices(g, full_subgroup(g).members(), p));
}

Subgroup sylow_subgroup_in(const Subgroup& h, unsigned p) {
  return Subgroup(h.parent(), sylow_indices(h.parent(), h.members(), p));
}

std::vector<int> set_product(const Subgroup& x, const Subgroup& y) {
  require_same_parent(x, y, "set_product");
  const FiniteGroup& g = x.parent();
  std::vector<char> in(g.order(), 0);
  std::vector<int> out;
  for (int a : x.members()) {
    for (int b : y.members()) {
      int prod = g.mul(a, b);
      if (!in[static_cast<std::size_t>(prod)]) {
        in[static_cast<std::size_t>(prod)] = 1;
        out.push_back(prod);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> intersection(const Subgroup& x, const Subgroup& y) {
  require_same_parent(x, y, "intersection");
  std::vector<int> out;
  for (int m : x.members()) {
    if (y.contains_index(m)) out.push_back(m);
  }
  return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> assigned(g.order(), 0);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (assigned[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cls;
    for (int y = 0; y < static_cast<int>(g.order()); ++y) {
      int c = g.conj(x, y);
      if (!assigned[static_cast<std::size_t>(c)]) {
        assigned[static_cast<std::size_t>(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> all_subgroups_of_p_group(const FiniteGroup& g, const Subgroup& p_group) {
  require_parent(g, p_group, "all_subgroups_of_p_group");
  if (p_group.order() > kSylowLatticeCap) {
    throw TooLarge("subgroup lattice walk: p-group order " + std::to_string(p_group.order()) +
                   " exceeds the cap of " + std::to_string(kSylowLatticeCap));
  }
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> work;
  seen.insert({0});
  work.push_back({0});
  while (!work.empty()) {
    std::vector<int> current = std::move(work.front());
    work.pop_front();
    std::vector<char> in(g.order(), 0);
    for (int m : current) in[static_cast<std::size_t>(m)] = 1;
    for (int x : p_group.members()) {
      if (in[static_cast<std::size_t>(x)]) continue;
      bool normalizes = true;
      for (int m : current) {
        if (!in[static_cast<std::size_t>(g.conj(m, x))]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<int> seeds = current;
      seeds.push_back(x);
      std::vector<int> extended = closure_indices(g, seeds);
      if (seen.insert(extended).second) work.push_back(std::move(extended));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.emplace_back(g, members);
  return out;
}

}  // namespace fg
