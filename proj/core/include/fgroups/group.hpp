#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fgroups/permutation.hpp"

namespace fg {

/// A fully enumerated permutation group. Elements are stored in canonical
/// order (lexicographic on image sequences, so the identity is always element
/// 0) and most operations work with element indices into that table.
///
/// Immutable after construction; safe to share across threads.
class FiniteGroup {
 public:
  /// Hard cap on the closure enumeration.
  static constexpr std::size_t kOrderCap = 100000;

  /// Closure of the generators under composition. Throws DegreeMismatch if a
  /// generator has the wrong degree and TooLarge if the closure exceeds
  /// kOrderCap. Generators must be nonempty (use {identity} for the trivial
  /// group).
  static FiniteGroup generate(unsigned degree, std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  /// Index in canonical order, or -1 if the permutation is not a member.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  /// Index arithmetic. All arguments must be valid element indices.
  int mul(int a, int b) const;
  int inv(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  int conj(int a, int g) const;  // index of g^-1 * a * g
  int pow(int a, std::uint64_t k) const;
  unsigned order_of(int a) const { return orders_[static_cast<std::size_t>(a)]; }

 private:
  FiniteGroup() = default;

  unsigned degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<unsigned> orders_;
  std::vector<int> inverses_;
  std::unordered_map<Permutation, int, PermHash> index_;
};

/// A subgroup of a FiniteGroup, stored as the ascending list of member
/// indices (the canonical form; equality is parent identity plus member
/// sequence equality). Holds a reference to its parent, which must outlive
/// the subgroup.
class Subgroup {
 public:
  /// Indices must be ascending, unique, within range and include 0. Closure
  /// is the caller's responsibility; every factory in this header produces
  /// closed sets.
  Subgroup(const FiniteGroup& parent, std::vector<int> members);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<int>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains_index(int i) const { return flags_[static_cast<std::size_t>(i)] != 0; }
  bool is_subset_of(const Subgroup& other) const;

  /// Members as permutations, canonical order.
  std::vector<Permutation> permutations() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteGroup* parent_;
  std::vector<int> members_;
  std::vector<char> flags_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing the seed; the trivial subgroup for an empty
/// seed. The permutation overload throws ElementNotInGroup.
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Permutation>& seed);

/// { x : forall s in S, s^x = s }. Throws ParentMismatch.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);

/// { x : S^x = S }. Throws ParentMismatch.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);

Subgroup center(const FiniteGroup& g);

/// Center of S inside its parent: members of S commuting with all of S.
Subgroup center_of(const Subgroup& s);

/// { s^x : s in S } for a member x (index or permutation). The permutation
/// overload throws ElementNotInGroup if x is not a member of the parent.
Subgroup conjugate_subgroup(const Subgroup& s, int x);
Subgroup conjugate_subgroup(const Subgroup& s, const Permutation& x);

/// First g in canonical order with A^g = B, or nullopt. Throws ParentMismatch.
std::optional<Permutation> conjugating_element(const FiniteGroup& g, const Subgroup& a,
                                               const Subgroup& b);

/// A Sylow p-subgroup: order is the full p-part of |G| (trivial if p does not
/// divide |G|). Grown from a cyclic p-subgroup by repeatedly adjoining a
/// p-element of the normalizer whose coset image has order p. Deterministic:
/// every choice takes the first candidate in canonical order.
/// Throws NotPrime.
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);

/// Sylow p-subgroup of a subgroup, returned as a subgroup of the same parent.
Subgroup sylow_subgroup_in(const Subgroup& h, unsigned p);

/// { x*y : x in X, y in Y } as ascending indices; a subgroup iff XY = YX
/// (not assumed). Throws ParentMismatch.
std::vector<int> set_product(const Subgroup& x, const Subgroup& y);

/// Ascending indices common to both subgroups. Throws ParentMismatch.
std::vector<int> intersection(const Subgroup& x, const Subgroup& y);

/// Conjugacy classes as ascending index lists, ordered by least member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// Every subgroup of a p-group P (trivial and P included), canonical order.
/// Walks the lattice bottom-up, extending each subgroup by one normalizing
/// element at a time. Throws TooLarge if |P| > 512, ParentMismatch.
std::vector<Subgroup> all_subgroups_of_p_group(const FiniteGroup& g, const Subgroup& p_group);

/// Cap on the p-group lattice walk.
inline constexpr std::size_t kSylowLatticeCap = 512;

}  // namespace fg
