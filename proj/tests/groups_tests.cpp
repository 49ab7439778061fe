#include <map>

#include "doctest.h"
#include "sphereforms/detail/rng.hpp"
#include "sphereforms/groups.hpp"

using namespace sphereforms;

namespace {

MobiusMap random_conjugator(detail::Rng& rng) {
  for (;;) {
    const Complex a = rng.in_disk(2.0), b = rng.in_disk(2.0);
    const Complex c = rng.in_disk(0.5), d = rng.in_disk(2.0);
    if (std::abs(a * d - b * c) > 0.3) return MobiusMap::from_coefficients(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("canonical groups close at the right orders") {
  CHECK(canonical_group({GroupType::trivial, 0}).size() == 1);
  CHECK(canonical_group({GroupType::cyclic, 2}).size() == 2);
  CHECK(canonical_group({GroupType::cyclic, 7}).size() == 7);
  CHECK(canonical_group({GroupType::dihedral, 2}).size() == 4);
  CHECK(canonical_group({GroupType::dihedral, 6}).size() == 12);
  CHECK(canonical_group({GroupType::tetra, 0}).size() == 12);
  CHECK(canonical_group({GroupType::octa, 0}).size() == 24);
  CHECK(canonical_group({GroupType::icosa, 0}).size() == 60);
}

TEST_CASE("element order histograms match the abstract groups") {
  const std::map<int, int> tetra_expected = {{1, 1}, {2, 3}, {3, 8}};
  const std::map<int, int> octa_expected = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<int, int> icosa_expected = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  CHECK(order_histogram(canonical_group({GroupType::tetra, 0})) == tetra_expected);
  CHECK(order_histogram(canonical_group({GroupType::octa, 0})) == octa_expected);
  CHECK(order_histogram(canonical_group({GroupType::icosa, 0})) == icosa_expected);
  const std::map<int, int> d3_expected = {{1, 1}, {2, 3}, {3, 2}};
  CHECK(order_histogram(canonical_group({GroupType::dihedral, 3})) == d3_expected);
}

TEST_CASE("closure order and histogram are invariant under random conjugation") {
  detail::Rng rng(2024);
  const GroupTypeTag tags[] = {{GroupType::tetra, 0},   {GroupType::octa, 0},
                               {GroupType::icosa, 0},   {GroupType::dihedral, 4},
                               {GroupType::cyclic, 5}};
  for (const auto& tag : tags) {
    const FiniteMobiusGroup G = canonical_group(tag);
    const auto hist = order_histogram(G);
    for (int trial = 0; trial < 10; ++trial) {
      const FiniteMobiusGroup H = conjugate(G, random_conjugator(rng));
      CHECK(H.size() == G.size());
      CHECK(order_histogram(H) == hist);
      CHECK(identify_type(H) == tag);
    }
  }
}

TEST_CASE("type identification distinguishes all families") {
  CHECK(identify_type(canonical_group({GroupType::cyclic, 4})) ==
        GroupTypeTag{GroupType::cyclic, 4});
  CHECK(identify_type(canonical_group({GroupType::dihedral, 2})) ==
        GroupTypeTag{GroupType::dihedral, 2});
  CHECK(short_name(identify_type(canonical_group({GroupType::octa, 0}))) == "S4");
}

TEST_CASE("rotation axes: counts and orders per group") {
  // Axis pairs {p, antipode}: icosahedral groups have 6 order-5, 10 order-3,
  // and 15 order-2 axes, 31 in total.
  const auto axes = nontrivial_fixed_points(canonical_group({GroupType::icosa, 0}));
  CHECK(axes.size() == 31);
  std::map<int, int> by_order;
  for (const auto& ax : axes) ++by_order[ax.order];
  CHECK(by_order == std::map<int, int>{{2, 15}, {3, 10}, {5, 6}});

  const auto tetra_axes = nontrivial_fixed_points(canonical_group({GroupType::tetra, 0}));
  CHECK(tetra_axes.size() == 7);  // 4 order-3 + 3 order-2

  const auto d3_axes = nontrivial_fixed_points(canonical_group({GroupType::dihedral, 3}));
  CHECK(d3_axes.size() == 4);  // the main axis + 3 flip axes
}

TEST_CASE("orbits have size dividing the group order; axis points are special") {
  detail::Rng rng(99);
  const FiniteMobiusGroup G = canonical_group({GroupType::octa, 0});
  for (int i = 0; i < 20; ++i) {
    const SpherePoint p = rng.on_sphere();
    const auto orb = orbit(G, p);
    CHECK(static_cast<int>(G.size()) % static_cast<int>(orb.size()) == 0);
  }
  for (const auto& ax : nontrivial_fixed_points(G)) {
    CHECK(orbit_size_class(G, ax.x) == OrbitSizeClass::special);
    CHECK(orbit(G, ax.x).size() * ax.order == G.size());
  }
}

TEST_CASE("membership respects the projective sign") {
  const FiniteMobiusGroup G = canonical_group({GroupType::cyclic, 4});
  const MobiusMap gen = MobiusMap::from_coefficients({0, 1}, {0, 0}, {0, 0}, {1, 0});
  const MobiusMap negated = MobiusMap::from_coefficients({0, -1}, {0, 0}, {0, 0}, {-1, 0});
  CHECK(group_contains(G, gen));
  CHECK(group_contains(G, negated));
}

TEST_CASE("non-closing generators are rejected by the cap") {
  const MobiusMap scale = MobiusMap::from_coefficients({2, 0}, {0, 0}, {0, 0}, {1, 0});
  CHECK_THROWS_AS(closure({scale}), std::domain_error);
}

TEST_CASE("generating sets regenerate the group") {
  for (const GroupTypeTag tag : {GroupTypeTag{GroupType::icosa, 0},
                                 GroupTypeTag{GroupType::dihedral, 5},
                                 GroupTypeTag{GroupType::cyclic, 6}}) {
    const FiniteMobiusGroup G = canonical_group(tag);
    const auto gens = generating_set(G);
    CHECK(gens.size() <= 2);
    CHECK(groups_equal(closure(gens), G));
  }
}

TEST_CASE("group names parse to tags") {
  CHECK(tag_from_name("Z5") == GroupTypeTag{GroupType::cyclic, 5});
  CHECK(tag_from_name("D12") == GroupTypeTag{GroupType::dihedral, 12});
  CHECK(tag_from_name("A4") == GroupTypeTag{GroupType::tetra, 0});
  CHECK(tag_from_name("S4") == GroupTypeTag{GroupType::octa, 0});
  CHECK(tag_from_name("A5") == GroupTypeTag{GroupType::icosa, 0});
  CHECK(tag_from_name("dihedral", 3) == GroupTypeTag{GroupType::dihedral, 3});
  CHECK_THROWS_AS(tag_from_name("Q8"), std::domain_error);
  CHECK_THROWS_AS(tag_from_name("Z1"), std::domain_error);
}
