#include "fgroups/catalog.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "fgroups/arith.hpp"
#include "fgroups/errors.hpp"

namespace fg {

namespace {

Permutation n_cycle(unsigned degree) {
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = (i + 1) % degree;
  return Permutation(std::move(images));
}

Permutation transposition(unsigned degree, unsigned a, unsigned b) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

Permutation three_cycle(unsigned degree, unsigned a, unsigned b, unsigned c) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  images[a] = b;
  images[b] = c;
  images[c] = a;
  return Permutation(std::move(images));
}

// Quaternion multiplication on slots 1, -1, i, -i, j, -j, k, -k: slot
// 2*letter + sign with letters 1, i, j, k.
int quaternion_mul(int x, int y) {
  static constexpr std::array<std::array<int, 4>, 4> letter = {{{0, 1, 2, 3},
                                                                {1, 0, 3, 2},
                                                                {2, 3, 0, 1},
                                                                {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{{0, 0, 0, 0},
                                                              {0, 1, 0, 1},
                                                              {0, 1, 1, 0},
                                                              {0, 0, 1, 1}}};
  int lx = x / 2, sx = x % 2;
  int ly = y / 2, sy = y % 2;
  return 2 * letter[lx][ly] + ((sx + sy + sign[lx][ly]) % 2);
}

Permutation quaternion_right_multiplication(int slot) {
  std::vector<unsigned> images(8);
  for (int x = 0; x < 8; ++x) images[x] = static_cast<unsigned>(quaternion_mul(x, slot));
  return Permutation(std::move(images));
}

// Slot permutation of the automorphism 1 -> 1, i -> j -> k -> i (signs follow).
Permutation quaternion_ijk_slot_permutation() {
  return Permutation(std::vector<unsigned>{0, 1, 4, 5, 6, 7, 2, 3});
}

Permutation embed(const Permutation& p, unsigned total, unsigned offset) {
  std::vector<unsigned> images(total);
  std::iota(images.begin(), images.end(), 0u);
  for (unsigned i = 0; i < p.degree(); ++i) images[offset + i] = offset + p(i);
  return Permutation(std::move(images));
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

FiniteGroup build_semidirect(const FiniteGroup& normal, const FiniteGroup& acting,
                             const std::vector<Permutation>& action) {
  const auto n_order = static_cast<unsigned>(normal.order());
  if (action.size() != acting.generators().size()) {
    throw InvalidAction("semidirect: one action permutation per acting generator required");
  }
  for (const auto& sigma : action) {
    if (sigma.degree() != n_order) {
      throw InvalidAction("semidirect: action permutation degree must equal the normal "
                          "factor's order");
    }
    for (unsigned x = 0; x < n_order; ++x) {
      for (unsigned y = 0; y < n_order; ++y) {
        int lhs = static_cast<int>(sigma(static_cast<unsigned>(
            normal.mul(static_cast<int>(x), static_cast<int>(y)))));
        int rhs = normal.mul(static_cast<int>(sigma(x)), static_cast<int>(sigma(y)));
        if (lhs != rhs) {
          throw InvalidAction("semidirect: action permutation is not an automorphism of the "
                              "normal factor");
        }
      }
    }
  }

  // Extend the generator assignment over the acting group's Cayley graph and
  // demand consistency; inconsistency means the map does not respect the
  // acting group's relations.
  std::vector<int> gen_indices;
  for (const auto& gen : acting.generators()) gen_indices.push_back(acting.index_of(gen));
  std::vector<std::optional<Permutation>> phi(acting.order());
  phi[0] = Permutation(n_order);
  std::deque<int> work{0};
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    for (std::size_t j = 0; j < gen_indices.size(); ++j) {
      int b = acting.mul(a, gen_indices[j]);
      Permutation extended = compose(*phi[static_cast<std::size_t>(a)], action[j]);
      if (!phi[static_cast<std::size_t>(b)]) {
        phi[static_cast<std::size_t>(b)] = std::move(extended);
        work.push_back(b);
      } else if (*phi[static_cast<std::size_t>(b)] != extended) {
        throw InvalidAction("semidirect: generator action does not extend to a homomorphism");
      }
    }
  }

  // Realize on N's element list plus A's natural points: normal generators
  // act by right multiplication, acting generators by their automorphism
  // together with their own representation.
  const unsigned total = n_order + acting.degree();
  std::vector<Permutation> generators;
  for (const auto& gen : normal.generators()) {
    int gen_index = normal.index_of(gen);
    std::vector<unsigned> images(total);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned x = 0; x < n_order; ++x) {
      images[x] = static_cast<unsigned>(normal.mul(static_cast<int>(x), gen_index));
    }
    generators.emplace_back(std::move(images));
  }
  for (std::size_t j = 0; j < action.size(); ++j) {
    std::vector<unsigned> images(total);
    for (unsigned x = 0; x < n_order; ++x) images[x] = action[j](x);
    const Permutation& natural = acting.generators()[j];
    for (unsigned i = 0; i < acting.degree(); ++i) images[n_order + i] = n_order + natural(i);
    generators.emplace_back(std::move(images));
  }
  FiniteGroup result = FiniteGroup::generate(total, std::move(generators));
  if (result.order() != normal.order() * acting.order()) {
    throw InvalidAction("semidirect: realized order does not match the factor orders");
  }
  return result;
}

}  // namespace

GroupSpec GroupSpec::cyclic(unsigned n) { return GroupSpec(Node(Cyclic{n})); }
GroupSpec GroupSpec::dihedral(unsigned n) { return GroupSpec(Node(Dihedral{n})); }
GroupSpec GroupSpec::symmetric(unsigned n) { return GroupSpec(Node(Symmetric{n})); }
GroupSpec GroupSpec::alternating(unsigned n) { return GroupSpec(Node(Alternating{n})); }
GroupSpec GroupSpec::quaternion8() { return GroupSpec(Node(Quaternion8{})); }

GroupSpec GroupSpec::elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p)) {
    throw NotPrime("elementary_abelian: " + std::to_string(p) + " is not prime");
  }
  return GroupSpec(Node(ElemAbelianSpec{p, k}));
}

GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
  return GroupSpec(Node(DirectProduct{std::make_shared<const GroupSpec>(std::move(a)),
                                      std::make_shared<const GroupSpec>(std::move(b))}));
}

GroupSpec GroupSpec::semidirect(GroupSpec normal, GroupSpec acting,
                                std::vector<Permutation> action) {
  return GroupSpec(Node(Semidirect{std::make_shared<const GroupSpec>(std::move(normal)),
                                   std::make_shared<const GroupSpec>(std::move(acting)),
                                   std::move(action)}));
}

std::uint64_t GroupSpec::predicted_order() const {
  struct Visitor {
    std::uint64_t operator()(const Cyclic& c) const { return std::max(1u, c.n); }
    std::uint64_t operator()(const Dihedral& d) const { return 2ull * std::max(1u, d.n); }
    std::uint64_t operator()(const Symmetric& s) const { return factorial(s.n); }
    std::uint64_t operator()(const Alternating& a) const {
      return a.n < 3 ? 1 : factorial(a.n) / 2;
    }
    std::uint64_t operator()(const Quaternion8&) const { return 8; }
    std::uint64_t operator()(const ElemAbelianSpec& e) const {
      std::uint64_t order = 1;
      for (unsigned i = 0; i < e.k; ++i) order *= e.p;
      return order;
    }
    std::uint64_t operator()(const DirectProduct& d) const {
      return d.a->predicted_order() * d.b->predicted_order();
    }
    std::uint64_t operator()(const Semidirect& s) const {
      return s.normal->predicted_order() * s.acting->predicted_order();
    }
  };
  return std::visit(Visitor{}, node_);
}

FiniteGroup build(const GroupSpec& spec) {
  if (spec.predicted_order() > FiniteGroup::kOrderCap) {
    throw TooLarge("build: predicted order exceeds the closure cap");
  }
  struct Visitor {
    FiniteGroup operator()(const GroupSpec::Cyclic& c) const {
      unsigned n = std::max(1u, c.n);
      return FiniteGroup::generate(n, {n_cycle(n)});
    }
    FiniteGroup operator()(const GroupSpec::Dihedral& d) const {
      if (d.n <= 1) return FiniteGroup::generate(2, {transposition(2, 0, 1)});
      if (d.n == 2) {
        return FiniteGroup::generate(4, {transposition(4, 0, 1), transposition(4, 2, 3)});
      }
      std::vector<unsigned> reflection(d.n);
      for (unsigned i = 0; i < d.n; ++i) reflection[i] = (d.n - i) % d.n;
      return FiniteGroup::generate(d.n, {n_cycle(d.n), Permutation(std::move(reflection))});
    }
    FiniteGroup operator()(const GroupSpec::Symmetric& s) const {
      unsigned n = std::max(1u, s.n);
      if (n == 1) return FiniteGroup::generate(1, {Permutation(1)});
      return FiniteGroup::generate(n, {n_cycle(n), transposition(n, 0, 1)});
    }
    FiniteGroup operator()(const GroupSpec::Alternating& a) const {
      unsigned n = std::max(1u, a.n);
      if (n < 3) return FiniteGroup::generate(n, {Permutation(n)});
      std::vector<Permutation> gens;
      for (unsigned c = 2; c < n; ++c) gens.push_back(three_cycle(n, 0, 1, c));
      return FiniteGroup::generate(n, std::move(gens));
    }
    FiniteGroup operator()(const GroupSpec::Quaternion8&) const { return quaternion_group(); }
    FiniteGroup operator()(const GroupSpec::ElemAbelianSpec& e) const {
      if (e.k == 0) return FiniteGroup::generate(1, {Permutation(1)});
      unsigned degree = e.p * e.k;
      std::vector<Permutation> gens;
      for (unsigned block = 0; block < e.k; ++block) {
        gens.push_back(embed(n_cycle(e.p), degree, block * e.p));
      }
      return FiniteGroup::generate(degree, std::move(gens));
    }
    FiniteGroup operator()(const GroupSpec::DirectProduct& d) const {
      FiniteGroup a = build(*d.a);
      FiniteGroup b = build(*d.b);
      unsigned total = a.degree() + b.degree();
      std::vector<Permutation> gens;
      for (const auto& gen : a.generators()) gens.push_back(embed(gen, total, 0));
      for (const auto& gen : b.generators()) gens.push_back(embed(gen, total, a.degree()));
      return FiniteGroup::generate(total, std::move(gens));
    }
    FiniteGroup operator()(const GroupSpec::Semidirect& s) const {
      FiniteGroup normal = build(*s.normal);
      FiniteGroup acting = build(*s.acting);
      return build_semidirect(normal, acting, s.action);
    }
  };
  return std::visit(Visitor{}, spec.node_);
}

FiniteGroup quaternion_group() {
  return FiniteGroup::generate(
      8, {quaternion_right_multiplication(2), quaternion_right_multiplication(4)});
}

Permutation quaternion_ijk_automorphism(const FiniteGroup& q8) {
  Permutation alpha = quaternion_ijk_slot_permutation();
  std::vector<unsigned> images(8);
  for (int slot = 0; slot < 8; ++slot) {
    int from = q8.index_of(quaternion_right_multiplication(slot));
    int to = q8.index_of(
        quaternion_right_multiplication(static_cast<int>(alpha(static_cast<unsigned>(slot)))));
    if (from < 0 || to < 0) {
      throw ElementNotInGroup("quaternion_ijk_automorphism: group is not the quaternion "
                              "regular representation");
    }
    images[static_cast<std::size_t>(from)] = static_cast<unsigned>(to);
  }
  return Permutation(std::move(images));
}

FiniteGroup quaternion_semidirect_c3() {
  return FiniteGroup::generate(8, {quaternion_right_multiplication(2),
                                   quaternion_right_multiplication(4),
                                   quaternion_ijk_slot_permutation()});
}

std::vector<NamedGroup> standard_catalog(std::uint64_t max_order) {
  if (max_order > 400) {
    throw TooLarge("standard_catalog: max_order " + std::to_string(max_order) + " exceeds 400");
  }
  std::vector<NamedGroup> catalog;
  auto add = [&](const std::string& name, const GroupSpec& spec) {
    if (spec.predicted_order() <= max_order) catalog.push_back({name, build(spec)});
  };
  for (unsigned n = 1; n <= 24; ++n) add("C" + std::to_string(n), GroupSpec::cyclic(n));
  for (unsigned n = 2; n <= 12; ++n) add("D" + std::to_string(n), GroupSpec::dihedral(n));
  add("S3", GroupSpec::symmetric(3));
  add("S4", GroupSpec::symmetric(4));
  add("A4", GroupSpec::alternating(4));
  add("A5", GroupSpec::alternating(5));
  add("Q8", GroupSpec::quaternion8());
  // The quaternion extension has no spec node; it is built directly in its
  // degree-8 representation.
  if (max_order >= 24) catalog.push_back({"Q8:C3", quaternion_semidirect_c3()});
  add("E4", GroupSpec::elementary_abelian(2, 2));
  add("E8", GroupSpec::elementary_abelian(2, 3));
  add("E16", GroupSpec::elementary_abelian(2, 4));
  add("E9", GroupSpec::elementary_abelian(3, 2));
  add("E27", GroupSpec::elementary_abelian(3, 3));
  add("E25", GroupSpec::elementary_abelian(5, 2));
  add("C4xS3", GroupSpec::direct_product(GroupSpec::cyclic(4), GroupSpec::symmetric(3)));
  add("D4xC3", GroupSpec::direct_product(GroupSpec::dihedral(4), GroupSpec::cyclic(3)));
  return catalog;
}

std::optional<NamedGroup> find_catalog_group(const std::string& name) {
  for (auto& entry : standard_catalog(400)) {
    if (entry.name == name) return std::move(entry);
  }
  return std::nullopt;
}

}  // namespace fg
