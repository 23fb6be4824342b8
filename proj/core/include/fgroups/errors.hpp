#pragma once

#include <stdexcept>

namespace fg {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Permutations of different degrees were combined.
struct DegreeMismatch final : Error {
  using Error::Error;
};

/// A closure, catalog or lattice walk exceeded its hard cap.
struct TooLarge final : Error {
  using Error::Error;
};

/// An element was expected to belong to a group but does not.
struct ElementNotInGroup final : Error {
  using Error::Error;
};

/// Subgroups of different parent groups were mixed in one operation.
struct ParentMismatch final : Error {
  using Error::Error;
};

/// An operation requiring a prime was given a composite number.
struct NotPrime final : Error {
  using Error::Error;
};

/// A semidirect action map is not a homomorphism by automorphisms.
struct InvalidAction final : Error {
  using Error::Error;
};

/// Malformed group file or cycle expression.
struct ParseError final : Error {
  using Error::Error;
};

/// A conditional operation was invoked with its hypothesis violated.
struct HypothesisNotMet final : Error {
  using Error::Error;
};

}  // namespace fg
