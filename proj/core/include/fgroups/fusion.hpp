#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgroups/group.hpp"

namespace fg {

enum class FusionClassKind {
  CyclicP,      // cyclic subgroups of order p
  Cyclic4,      // cyclic subgroups of order 4
  Cp,           // CyclicP for odd p; CyclicP(2) plus Cyclic4 for p = 2
  ElemAbelian,  // nontrivial subgroups in which every nonidentity element has order p
  PSubgroups,   // all nontrivial p-subgroups
};

/// Selects which subgroups a fusion predicate quantifies over.
struct FusionClass {
  FusionClassKind kind;
  unsigned p;

  static FusionClass cyclic_p(unsigned p);
  static FusionClass cyclic4();
  static FusionClass cp(unsigned p);
  static FusionClass elem_abelian(unsigned p);
  static FusionClass p_subgroups(unsigned p);
};

struct FusionOptions {
  /// Scan every (A, g) pair even after the first violation. The witness is
  /// the same either way (scans run in canonical order); only checked_count
  /// grows.
  bool exhaustive = false;
};

/// Outcome of a control-of-fusion check.
///
/// condition_a: every class subgroup of G has a conjugate inside H.
/// condition_b: for every class subgroup A <= H and g in G with A^g <= H,
///              g lies in C_G(A) * H.
/// witness_a: a class subgroup with no conjugate inside H (iff !condition_a).
/// witness_b: the first (A, g) violating condition_b (iff !condition_b).
/// checked_count: class subgroups examined for (a) plus (A, g) pairs
///                membership-tested for (b), in canonical scan order.
struct FusionReport {
  bool condition_a = true;
  bool condition_b = true;
  std::optional<Subgroup> witness_a;
  std::optional<std::pair<Subgroup, Permutation>> witness_b;
  std::uint64_t checked_count = 0;

  bool both() const { return condition_a && condition_b; }
};

/// All subgroups of G in the class, deduplicated, canonical order.
/// ElemAbelian grows commuting sets of order-p elements; PSubgroups walks the
/// Sylow lattice and closes under conjugation (throws TooLarge past the
/// lattice cap).
std::vector<Subgroup> enumerate_class(const FiniteGroup& g, const FusionClass& cls);

/// Whether H controls fusion of class subgroups in G. Throws ParentMismatch,
/// TooLarge (propagated from class enumeration).
FusionReport controls_fusion(const FiniteGroup& g, const Subgroup& h, const FusionClass& cls,
                             const FusionOptions& opts = {});

/// Whether H controls p-fusion in G: condition (a) becomes "|H| contains the
/// full p-part of |G|" and condition (b) quantifies over the nontrivial
/// p-subgroups of H. Throws NotPrime, ParentMismatch, TooLarge.
FusionReport controls_p_fusion(const FiniteGroup& g, const Subgroup& h, unsigned p,
                               const FusionOptions& opts = {});

/// {condition_a, condition_b, witness_a?, witness_b?, checked_count} as JSON.
std::string to_json(const FusionReport& report);

}  // namespace fg
