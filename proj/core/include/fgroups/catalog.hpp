#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fgroups/group.hpp"

namespace fg {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Declarative recipe for a concrete permutation group. Natural
/// representations are used where one exists (symmetric, alternating, cyclic,
/// dihedral); abstract constructions fall back on the regular representation.
class GroupSpec {
 public:
  static GroupSpec cyclic(unsigned n);
  static GroupSpec dihedral(unsigned n);  // order 2n
  static GroupSpec symmetric(unsigned n);
  static GroupSpec alternating(unsigned n);
  static GroupSpec quaternion8();
  static GroupSpec elementary_abelian(unsigned p, unsigned k);
  static GroupSpec direct_product(GroupSpec a, GroupSpec b);

  /// Semidirect product N x| A. The action maps each generator of the built
  /// acting group (in generator order) to a permutation of the built normal
  /// group's canonical element list; each must be an automorphism and the
  /// assignment must extend to a homomorphism (validated, InvalidAction
  /// otherwise). The realization acts on N's elements plus A's natural
  /// points.
  static GroupSpec semidirect(GroupSpec normal, GroupSpec acting,
                              std::vector<Permutation> action);

  std::uint64_t predicted_order() const;

  friend FiniteGroup build(const GroupSpec& spec);

 private:
  struct Cyclic {
    unsigned n;
  };
  struct Dihedral {
    unsigned n;
  };
  struct Symmetric {
    unsigned n;
  };
  struct Alternating {
    unsigned n;
  };
  struct Quaternion8 {};
  struct ElemAbelianSpec {
    unsigned p, k;
  };
  struct DirectProduct {
    std::shared_ptr<const GroupSpec> a, b;
  };
  struct Semidirect {
    std::shared_ptr<const GroupSpec> normal, acting;
    std::vector<Permutation> action;
  };
  using Node = std::variant<Cyclic, Dihedral, Symmetric, Alternating, Quaternion8,
                            ElemAbelianSpec, DirectProduct, Semidirect>;

  explicit GroupSpec(Node node) : node_(std::move(node)) {}

  Node node_;
};

/// Realizes a GroupSpec; the order always equals predicted_order(). Throws
/// InvalidAction for a bad semidirect action, TooLarge past the closure cap.
FiniteGroup build(const GroupSpec& spec);

/// The quaternion group of order 8 in its regular representation (degree 8),
/// element slots ordered 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();

/// The order-3 automorphism cycling i -> j -> k -> i, as a permutation of the
/// canonical element list of quaternion_group() (suitable as a semidirect
/// action map entry).
Permutation quaternion_ijk_automorphism(const FiniteGroup& q8);

/// Degree-8 extension of the quaternion group's regular representation by the
/// i -> j -> k automorphism; order 24.
FiniteGroup quaternion_semidirect_c3();

/// Deterministic list of named groups of order <= max_order: cyclic up to
/// C24, dihedral D2..D12, S3, S4, A4, A5, Q8, Q8:C3, elementary abelian of
/// order <= 27 (plus E25), C4xS3 and D4xC3. Throws TooLarge if
/// max_order > 400.
std::vector<NamedGroup> standard_catalog(std::uint64_t max_order);

/// Catalog entry by name, or nullopt.
std::optional<NamedGroup> find_catalog_group(const std::string& name);

}  // namespace fg
