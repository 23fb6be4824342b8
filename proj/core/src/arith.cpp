#include "fgroups/arith.hpp"

namespace fg {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) noexcept {
  std::uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(static_cast<unsigned>(n));
  return primes;
}

unsigned p_bar(unsigned p) noexcept { return p == 2 ? 4 : p; }

}  // namespace fg
