#include <array>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "sphereforms/detail/rng.hpp"
#include "sphereforms/mobius.hpp"

using namespace sphereforms;

namespace {

MobiusMap random_map(detail::Rng& rng) {
  for (;;) {
    const Complex a = rng.in_disk(2.0), b = rng.in_disk(2.0);
    const Complex c = rng.in_disk(2.0), d = rng.in_disk(2.0);
    if (std::abs(a * d - b * c) > 0.1) return MobiusMap::from_coefficients(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("maps are stored with determinant 1 and degenerate input throws") {
  detail::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const MobiusMap T = random_map(rng);
    CHECK(std::abs(T.a() * T.d() - T.b() * T.c() - Complex(1, 0)) < 1e-12);
  }
  CHECK_THROWS_AS(MobiusMap::from_coefficients({1, 0}, {2, 0}, {2, 0}, {4, 0}),
                  std::domain_error);
}

TEST_CASE("map equality ignores the projective sign") {
  const MobiusMap T = MobiusMap::from_coefficients({0, 1}, {2, 0}, {0, 0}, {1, 0});
  const MobiusMap minusT =
      MobiusMap::from_coefficients({0, -1}, {-2, 0}, {0, 0}, {-1, 0});
  CHECK(maps_equal(T, minusT));
  CHECK(is_identity(compose(T, T.inverse())));
}

TEST_CASE("composition is associative and respects application") {
  detail::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const MobiusMap A = random_map(rng), B = random_map(rng), C = random_map(rng);
    CHECK(maps_equal(compose(compose(A, B), C), compose(A, compose(B, C)), 1e-9));
    const SpherePoint p = rng.on_sphere();
    CHECK(points_equal(compose(A, B).apply(p), A.apply(B.apply(p)), 1e-7));
  }
}

TEST_CASE("three point pairs determine the map") {
  detail::Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const MobiusMap T = random_map(rng);
    std::array<SpherePoint, 3> src = {rng.on_sphere(), rng.on_sphere(), rng.on_sphere()};
    if (chordal_distance(src[0], src[1]) < 1e-2 || chordal_distance(src[1], src[2]) < 1e-2 ||
        chordal_distance(src[0], src[2]) < 1e-2)
      continue;
    const std::array<SpherePoint, 3> dst = {T.apply(src[0]), T.apply(src[1]), T.apply(src[2])};
    CHECK(maps_equal(from_three_pairs(src, dst), T, 1e-6));
  }
  const std::array<SpherePoint, 3> degenerate = {SpherePoint::from_complex({0, 0}),
                                                 SpherePoint::from_complex({0, 0}),
                                                 SpherePoint::infinity()};
  CHECK_THROWS_AS(from_three_pairs(degenerate, degenerate), std::domain_error);
}

TEST_CASE("rotation order detects finite order and rejects loxodromics") {
  const MobiusMap quarter = MobiusMap::from_coefficients({0, 1}, {0, 0}, {0, 0}, {1, 0});
  CHECK(rotation_order(quarter) == 4);
  const MobiusMap half = MobiusMap::from_coefficients({-1, 0}, {0, 0}, {0, 0}, {1, 0});
  CHECK(rotation_order(half) == 2);
  const MobiusMap scale = MobiusMap::from_coefficients({2, 0}, {0, 0}, {0, 0}, {1, 0});
  CHECK_FALSE(rotation_order(scale).has_value());
  CHECK(rotation_order(MobiusMap::identity()) == 1);
}

TEST_CASE("fixed points are preserved by the map") {
  detail::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const MobiusMap T = random_map(rng);
    for (const SpherePoint& p : fixed_points(T)) CHECK(points_equal(T.apply(p), p, 1e-6));
  }
}

TEST_CASE("anti maps: conjugation squares to an ordinary map, reflections fix a circle") {
  const AntiMobiusMap conj_map(MobiusMap::identity());  // z -> conj(z)
  CHECK(is_involution(conj_map));
  CHECK(is_reflection(conj_map));
  const std::array<SpherePoint, 3> circle = fixed_circle_points(conj_map);
  for (const auto& p : circle) CHECK(points_equal(conj_map.apply(p), p, 1e-7));

  // unit-circle reflection z -> 1/conj(z)
  const AntiMobiusMap inv(MobiusMap::from_coefficients({0, 0}, {1, 0}, {1, 0}, {0, 0}));
  CHECK(is_reflection(inv));
  CHECK(points_equal(inv.apply(SpherePoint::from_complex({0.5, 0})),
                     SpherePoint::from_complex({2.0, 0})));

  // the antipodal map z -> -1/conj(z) is an involution but fixes no circle
  const AntiMobiusMap antipode(MobiusMap::from_coefficients({0, 0}, {-1, 0}, {1, 0}, {0, 0}));
  CHECK(is_involution(antipode));
  CHECK_FALSE(is_reflection(antipode));
}

TEST_CASE("reflection through three points fixes them") {
  detail::Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    const SpherePoint a = rng.on_sphere(), b = rng.on_sphere(), c = rng.on_sphere();
    if (chordal_distance(a, b) < 0.1 || chordal_distance(b, c) < 0.1 ||
        chordal_distance(a, c) < 0.1)
      continue;
    const AntiMobiusMap s = reflection_from_three_points(a, b, c);
    CHECK(is_reflection(s, 1e-6));
    CHECK(points_equal(s.apply(a), a, 1e-6));
    CHECK(points_equal(s.apply(b), b, 1e-6));
    CHECK(points_equal(s.apply(c), c, 1e-6));
  }
}

TEST_CASE("transport maps multisets elementwise") {
  detail::Rng rng(67);
  const MobiusMap T = random_map(rng);
  PointMultiset s = {rng.on_sphere(), rng.on_sphere(), rng.on_sphere()};
  const PointMultiset img = transport(T, s);
  REQUIRE(img.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(points_equal(img[i], T.apply(s[i]), 1e-9));
}
