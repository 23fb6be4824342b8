#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgroups/group.hpp"

namespace fg {

/// Ascending upper central series Z_0 = 1 <= Z_1 <= ... computed by the
/// direct commutator membership test Z_{i+1} = { x : [x, g] in Z_i for all g }.
/// Terms stop at the hypercenter: the series ends as soon as a term equals G,
/// or repeats its predecessor (the repeat is kept, so a proper hypercenter is
/// visible as two equal trailing terms).
struct CentralSeries {
  std::vector<Subgroup> terms;

  const Subgroup& hypercenter() const { return terms.back(); }
  bool reaches_full() const { return terms.back().order() == terms.back().parent().order(); }
};

/// Verdict of a p-nilpotency test.
/// complement: the normal p-complement when p_nilpotent (filled by
///             is_p_nilpotent; frobenius_criterion leaves it empty).
/// frobenius_witness: a pair (B, g) with B <= P and g a p'-element of N_G(B)
///             not centralizing B, when the Frobenius check fails.
struct NilpotencyVerdict {
  unsigned p = 2;
  bool p_nilpotent = false;
  std::optional<Subgroup> complement;
  std::optional<std::pair<Subgroup, Permutation>> frobenius_witness;
};

/// G is p-nilpotent iff K = <all p'-elements> has order |G| / p-part(|G|);
/// K is always normal, and equals the complement when the test passes.
/// Throws NotPrime.
NilpotencyVerdict is_p_nilpotent(const FiniteGroup& g, unsigned p);

/// Independent brute-force route: searches unions of p'-conjugacy-classes of
/// total size |G| / p-part for one closed under multiplication. Returns the
/// first hit in canonical order or nullopt. Throws NotPrime, TooLarge if
/// |G| > 400.
std::optional<Subgroup> normal_complement_oracle(const FiniteGroup& g, unsigned p);

/// Frobenius criterion: p-nilpotent iff every p'-element normalizing a
/// subgroup B of a Sylow p-subgroup centralizes B. Enumerates the full
/// subgroup lattice of the Sylow subgroup, so requires its order <= 512.
/// Throws NotPrime, TooLarge.
NilpotencyVerdict frobenius_criterion(const FiniteGroup& g, unsigned p);

CentralSeries upper_central_series(const FiniteGroup& g);

/// <x : x^pbar = 1> where pbar = p for odd p and 4 for p = 2; normal in G.
/// Throws NotPrime.
Subgroup omega_bar(const FiniteGroup& g, unsigned p);

/// With K = omega_bar(G, p) contained in some upper central term Z_n(G) and
/// p^e the exponent of K, checks that every g^(p^(e+n)) centralizes K.
/// Throws HypothesisNotMet if K is not contained in any term (or is not a
/// p-group), NotPrime.
bool hall_petrescu_consequence(const FiniteGroup& g, unsigned p);

/// {p, p_nilpotent, complement_order?, frobenius_witness?} as JSON.
std::string to_json(const NilpotencyVerdict& verdict);

}  // namespace fg
