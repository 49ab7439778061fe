#include <cmath>
#include <complex>

#include "doctest.h"
#include "sphereforms/detail/rng.hpp"
#include "sphereforms/sphere_point.hpp"

using namespace sphereforms;

namespace {

SpherePoint random_point(detail::Rng& rng) { return rng.on_sphere(); }

}  // namespace

TEST_CASE("projective pair normalization keeps the larger component at 1") {
  const SpherePoint small = SpherePoint::from_complex({0.25, -0.125});
  CHECK(small.den() == Complex(1.0, 0.0));
  const SpherePoint big = SpherePoint::from_complex({40.0, 9.0});
  CHECK(big.num() == Complex(1.0, 0.0));
  CHECK(SpherePoint::infinity().is_infinity());
  CHECK_FALSE(big.is_infinity());
  CHECK_THROWS_AS(SpherePoint::from_pair({0, 0}, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(SpherePoint::infinity().value(), std::domain_error);
}

TEST_CASE("chordal distance equals the euclidean distance of sphere embeddings") {
  detail::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint a = random_point(rng), b = random_point(rng);
    const auto ea = a.embed3(), eb = b.embed3();
    const double euclid = std::sqrt((ea[0] - eb[0]) * (ea[0] - eb[0]) +
                                    (ea[1] - eb[1]) * (ea[1] - eb[1]) +
                                    (ea[2] - eb[2]) * (ea[2] - eb[2]));
    CHECK(chordal_distance(a, b) == doctest::Approx(euclid).epsilon(1e-12));
  }
}

TEST_CASE("chordal distance: symmetry, triangle inequality, known values") {
  detail::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(chordal_distance(a, b) == doctest::Approx(chordal_distance(b, a)));
    CHECK(chordal_distance(a, c) <= chordal_distance(a, b) + chordal_distance(b, c) + 1e-12);
  }
  CHECK(chordal_distance(SpherePoint::from_complex({0, 0}), SpherePoint::infinity()) ==
        doctest::Approx(2.0));
  CHECK(chordal_distance(SpherePoint::from_complex({1, 0}),
                         SpherePoint::from_complex({-1, 0})) == doctest::Approx(2.0));
}

TEST_CASE("embedding round-trips and antipodal points are diametrically opposite") {
  detail::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint p = random_point(rng);
    CHECK(points_equal(SpherePoint::from_embed3(p.embed3()), p, 1e-12));
    CHECK(chordal_distance(p, p.antipodal()) == doctest::Approx(2.0));
  }
  CHECK(points_equal(SpherePoint::from_complex({0, 0}).antipodal(), SpherePoint::infinity()));
}

TEST_CASE("points_equal treats near-infinity pairs consistently") {
  const SpherePoint almost_inf = SpherePoint::from_complex({1e12, 0});
  CHECK(points_equal(almost_inf, SpherePoint::infinity(), 1e-8));
  CHECK_FALSE(points_equal(SpherePoint::from_complex({1e3, 0}), SpherePoint::infinity(), 1e-8));
}

TEST_CASE("arc midpoint is equidistant; circumcenter is equidistant from all three") {
  detail::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint a = random_point(rng), b = random_point(rng);
    if (chordal_distance(a, b) < 1e-3 || chordal_distance(a, b.antipodal()) < 1e-3) continue;
    const SpherePoint m = sphere_arc_midpoint(a, b);
    CHECK(chordal_distance(m, a) == doctest::Approx(chordal_distance(m, b)).epsilon(1e-9));
  }
  const SpherePoint c = sphere_circumcenter(SpherePoint::from_complex({1, 0}),
                                            SpherePoint::from_complex({0, 1}),
                                            SpherePoint::from_complex({-1, 0}));
  CHECK(chordal_distance(c, SpherePoint::from_complex({1, 0})) ==
        doctest::Approx(chordal_distance(c, SpherePoint::from_complex({0, 1}))));
}

TEST_CASE("multiset matching is order-free and multiplicity-aware") {
  detail::Rng rng(43);
  PointMultiset a;
  for (int i = 0; i < 8; ++i) a.push_back(random_point(rng));
  a.push_back(a[0]);  // duplicate entry
  PointMultiset b = a;
  std::swap(b[1], b[5]);
  std::swap(b[0], b[8]);
  CHECK(multisets_equal(a, b));
  b.pop_back();
  CHECK_FALSE(multisets_equal(a, b));
  b.push_back(random_point(rng));
  CHECK_FALSE(multisets_equal(a, b));
}

TEST_CASE("min pairwise chordal distance and separation predicate agree") {
  PointMultiset s = {SpherePoint::from_complex({0, 0}), SpherePoint::from_complex({1, 0}),
                     SpherePoint::infinity()};
  CHECK(pairwise_separated(s, 1e-8));
  CHECK(min_pairwise_chordal(s) == doctest::Approx(std::sqrt(2.0)));
  s.push_back(SpherePoint::from_complex({1e-12, 0}));
  CHECK_FALSE(pairwise_separated(s, 1e-8));
}
