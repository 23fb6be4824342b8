#pragma once

#include <cstdint>
#include <vector>

namespace fg {

bool is_prime(unsigned n) noexcept;

/// Largest power of p dividing n; 1 if p does not divide n. Requires n >= 1, p >= 2.
std::uint64_t p_part(std::uint64_t n, unsigned p) noexcept;

/// Distinct primes dividing n, ascending.
std::vector<unsigned> prime_divisors(std::uint64_t n);

/// The torsion bound attached to a prime: p itself for odd p, 4 for p = 2.
unsigned p_bar(unsigned p) noexcept;

}  // namespace fg
