#include "fgroups/permutation.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fgroups/errors.hpp"

namespace fg {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch(std::string(op) + ": degrees " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()) + " differ");
  }
}

}  // namespace

Permutation::Permutation(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("image sequence is not a bijection");
    }
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "compose");
  std::vector<unsigned> out(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) out[i] = b(a(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& a) {
  std::vector<unsigned> out(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) out[a(i)] = i;
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  require_same_degree(a, g, "conjugate");
  // g^-1 a g maps i to g[a[g^-1[i]]]; build it in one pass over g.
  std::vector<unsigned> out(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) out[g(i)] = g(a(i));
  return Permutation(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "commutator");
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

unsigned element_order(const Permutation& a) {
  unsigned result = 1;
  std::vector<char> seen(a.degree(), 0);
  for (unsigned start = 0; start < a.degree(); ++start) {
    if (seen[start]) continue;
    unsigned length = 0;
    for (unsigned i = start; !seen[i]; i = a(i)) {
      seen[i] = 1;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Permutation power(const Permutation& a, long long k) {
  Permutation base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  e %= element_order(a);
  Permutation result(a.degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& a) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<char> seen(a.degree(), 0);
  for (unsigned start = 0; start < a.degree(); ++start) {
    if (seen[start] || a(start) == start) {
      seen[start] = 1;
      continue;
    }
    std::vector<unsigned> cycle;
    for (unsigned i = start; !seen[i]; i = a(i)) {
      seen[i] = 1;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return os << "()";
  for (const auto& cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os;
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fg
