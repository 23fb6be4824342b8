#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "fgroups/catalog.hpp"
#include "fgroups/cycles.hpp"
#include "fgroups/errors.hpp"
#include "fgroups/group.hpp"
#include "fgroups/nilpotency.hpp"

using namespace fg;

namespace {

int count_involutions(const FiniteGroup& g) {
  int n = 0;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (g.order_of(i) == 2) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("constructors realize their predicted orders") {
    std::vector<GroupSpec> specs{
        GroupSpec::cyclic(1),
        GroupSpec::cyclic(24),
        GroupSpec::dihedral(2),
        GroupSpec::dihedral(7),
        GroupSpec::symmetric(4),
        GroupSpec::alternating(5),
        GroupSpec::quaternion8(),
        GroupSpec::elementary_abelian(3, 3),
        GroupSpec::direct_product(GroupSpec::cyclic(4), GroupSpec::symmetric(3)),
        GroupSpec::direct_product(GroupSpec::dihedral(4), GroupSpec::cyclic(3)),
    };
    for (const auto& spec : specs) {
      CHECK(build(spec).order() == spec.predicted_order());
    }
    CHECK(GroupSpec::symmetric(4).predicted_order() == 24);
    CHECK(GroupSpec::alternating(5).predicted_order() == 60);
    CHECK(GroupSpec::dihedral(9).predicted_order() == 18);
  }

  TEST_CASE("quaternion group") {
    FiniteGroup q8 = quaternion_group();
    CHECK(q8.order() == 8);
    CHECK(q8.degree() == 8);
    CHECK(count_involutions(q8) == 1);
    // Unique minimal subgroup: every nontrivial subgroup contains the center.
    Subgroup z = center(q8);
    CHECK(z.order() == 2);
    for (const auto& sub : all_subgroups_of_p_group(q8, full_subgroup(q8))) {
      if (sub.order() > 1) CHECK(z.is_subset_of(sub));
    }
  }

  TEST_CASE("quaternion extension by the triangle automorphism") {
    FiniteGroup g = quaternion_semidirect_c3();
    CHECK(g.order() == 24);
    CHECK(g.degree() == 8);
    CHECK(count_involutions(g) == 1);
    CHECK_FALSE(is_p_nilpotent(g, 2).p_nilpotent);
  }

  TEST_CASE("generic semidirect product matches the direct construction") {
    FiniteGroup q8 = quaternion_group();
    Permutation alpha = quaternion_ijk_automorphism(q8);
    CHECK(element_order(alpha) == 3);
    FiniteGroup g = build(GroupSpec::semidirect(GroupSpec::quaternion8(), GroupSpec::cyclic(3),
                                                {alpha}));
    CHECK(g.order() == 24);
    CHECK(count_involutions(g) == 1);
    CHECK_FALSE(is_p_nilpotent(g, 2).p_nilpotent);
    CHECK(is_p_nilpotent(g, 3).p_nilpotent);
  }

  TEST_CASE("semidirect products keep the normal factor normal and complemented") {
    // C3 x| C2 with the inversion action is the nonabelian order-6 group.
    Permutation invert(std::vector<unsigned>{0, 2, 1});  // x -> x^-1 on C3's elements
    FiniteGroup g =
        build(GroupSpec::semidirect(GroupSpec::cyclic(3), GroupSpec::cyclic(2), {invert}));
    CHECK(g.order() == 6);
    CHECK(center(g).order() == 1);

    // The normal factor is generated by the first block generators.
    Subgroup normal_factor = subgroup_closure(g, {g.generators()[0]});
    CHECK(normal_factor.order() == 3);
    CHECK(normalizer(g, normal_factor).order() == g.order());
    Subgroup complement = subgroup_closure(g, {g.generators()[1]});
    CHECK(complement.order() == 2);
    CHECK(intersection(normal_factor, complement) == std::vector<int>{0});
    CHECK(set_product(normal_factor, complement).size() == g.order());
  }

  TEST_CASE("semidirect validation rejects bad actions") {
    // Swapping the identity slot with another is no automorphism.
    Permutation not_auto(std::vector<unsigned>{1, 0, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(build(GroupSpec::semidirect(GroupSpec::quaternion8(), GroupSpec::cyclic(3),
                                                {not_auto})),
                    InvalidAction);

    // An order-2 automorphism of C4 assigned to a C3 generator violates the
    // acting group's relations.
    Permutation c4_invert(std::vector<unsigned>{0, 3, 2, 1});
    CHECK_THROWS_AS(build(GroupSpec::semidirect(GroupSpec::cyclic(4), GroupSpec::cyclic(3),
                                                {c4_invert})),
                    InvalidAction);

    // Degree mismatch against the normal factor's order.
    CHECK_THROWS_AS(build(GroupSpec::semidirect(GroupSpec::cyclic(4), GroupSpec::cyclic(2),
                                                {Permutation(3)})),
                    InvalidAction);

    // One permutation per acting generator.
    CHECK_THROWS_AS(
        build(GroupSpec::semidirect(GroupSpec::cyclic(4), GroupSpec::cyclic(2), {})),
        InvalidAction);
  }

  TEST_CASE("direct products") {
    FiniteGroup c6 = build(GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::cyclic(3)));
    CHECK(c6.order() == 6);
    bool has_order_6 = false;
    for (int i = 0; i < 6; ++i) has_order_6 |= c6.order_of(i) == 6;
    CHECK(has_order_6);  // coprime product is cyclic

    FiniteGroup d4xc3 = build(GroupSpec::direct_product(GroupSpec::dihedral(4), GroupSpec::cyclic(3)));
    CHECK(d4xc3.order() == 24);
    CHECK(center(d4xc3).order() == 6);
  }

  TEST_CASE("elementary abelian groups") {
    FiniteGroup e9 = build(GroupSpec::elementary_abelian(3, 2));
    CHECK(e9.order() == 9);
    for (int i = 1; i < 9; ++i) CHECK(e9.order_of(i) == 3);
    CHECK_THROWS_AS(GroupSpec::elementary_abelian(6, 2), NotPrime);
  }

  TEST_CASE("catalog filtering is deterministic") {
    auto small = standard_catalog(1);
    REQUIRE(small.size() == 1);
    CHECK(small[0].name == "C1");

    auto names_of = [](const std::vector<NamedGroup>& catalog) {
      std::vector<std::string> names;
      for (const auto& entry : catalog) names.push_back(entry.name);
      return names;
    };

    auto upto24 = names_of(standard_catalog(24));
    CHECK(std::count(upto24.begin(), upto24.end(), "Q8:C3") == 1);
    CHECK(std::count(upto24.begin(), upto24.end(), "S4") == 1);
    CHECK(std::count(upto24.begin(), upto24.end(), "A5") == 0);
    CHECK(std::count(upto24.begin(), upto24.end(), "E27") == 0);

    auto upto60 = names_of(standard_catalog(60));
    CHECK(std::count(upto60.begin(), upto60.end(), "A5") == 1);

    for (const auto& entry : standard_catalog(200)) {
      CHECK(entry.group.order() <= 200);
    }
    CHECK(names_of(standard_catalog(200)) == names_of(standard_catalog(200)));
    CHECK_THROWS_AS(standard_catalog(401), TooLarge);
  }

  TEST_CASE("catalog lookup by name") {
    auto entry = find_catalog_group("Q8:C3");
    REQUIRE(entry.has_value());
    CHECK(entry->group.order() == 24);
    CHECK_FALSE(find_catalog_group("M11").has_value());
  }

  TEST_CASE("oversized builds are rejected early") {
    CHECK_THROWS_AS(build(GroupSpec::symmetric(9)), TooLarge);
  }
}
