#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace fg {

/// A bijection of {0, ..., degree-1} stored as its image sequence:
/// images()[i] is where point i maps.
///
/// One composition convention is used everywhere: compose(a, b) applies a
/// first and b second, so compose(a, b) maps i to b[a[i]]. Conjugation is
/// conjugate(a, g) = compose(compose(inverse(g), a), g), i.e. "a to the g",
/// and is a right action:
///   conjugate(conjugate(a, g), h) == conjugate(a, compose(g, h)).
class Permutation {
 public:
  /// Identity of the given degree (degree >= 1).
  explicit Permutation(unsigned degree);

  /// From an explicit image sequence; throws std::invalid_argument if the
  /// sequence is not a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  const std::vector<unsigned>& images() const { return images_; }
  unsigned operator()(unsigned point) const { return images_[point]; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

/// Apply a first, then b. Throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// g^-1 * a * g under the convention above. Throws DegreeMismatch.
Permutation conjugate(const Permutation& a, const Permutation& g);

/// [a, b] = a^-1 b^-1 a b; identity iff a and b commute. Throws DegreeMismatch.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Least k >= 1 with a^k = identity; the lcm of the cycle lengths.
unsigned element_order(const Permutation& a);

/// a^k for any integer k (negative exponents use the inverse).
Permutation power(const Permutation& a, long long k);

/// Cycle decomposition, nontrivial cycles only, each starting at its least
/// point, cycles ordered by least point.
std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& a);

/// Prints cycle notation, "()" for the identity.
std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fg
