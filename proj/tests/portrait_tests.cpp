#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "sphereforms/portrait.hpp"
#include "test_support.hpp"

using namespace sphereforms;

namespace {

int count_substring(const std::string& text, const std::string& what) {
  int n = 0;
  for (std::size_t pos = text.find(what); pos != std::string::npos;
       pos = text.find(what, pos + what.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("the guard radius scales the closest special pair") {
  // The two-pole form has specials 0 and infinity, chordal distance 2.
  const RationalOneForm pair = test_support::bundled("two_pole");
  CHECK(guard_radius(pair) == doctest::Approx(2e-3).epsilon(1e-9));
  CHECK(guard_radius(pair, 1e-2) == doctest::Approx(2e-2).epsilon(1e-9));
}

TEST_CASE("field samples populate the lattice and respect the guard") {
  const RationalOneForm pair = test_support::bundled("two_pole");
  const Window win;
  const auto corners = sample_grid(pair, win, 2, 2);
  REQUIRE(corners.size() == 4);
  for (const auto& s : corners) {
    CHECK(std::abs(s.at.real()) == 3.0);
    CHECK(std::abs(s.at.imag()) == 3.0);
    CHECK(std::abs(s.value * pair.evaluate_unchecked(s.at) - 1.0) < 1e-12);
  }

  const RationalOneForm tetra = test_support::bundled("tetrahedral");
  const double theta = 0.7;
  const auto grid = sample_grid(tetra, win, 25, 25, theta);
  CHECK(grid.size() <= 625);
  CHECK(grid.size() >= 600);
  const double guard = guard_radius(tetra);
  PointMultiset specials = tetra.poles();
  specials.insert(specials.end(), tetra.zeros().begin(), tetra.zeros().end());
  const Complex phase = std::polar(1.0, -theta);
  for (const auto& s : grid) {
    const SpherePoint sp = SpherePoint::from_complex(s.at);
    for (const auto& spc : specials) CHECK(chordal_distance(sp, spc) > guard);
    CHECK(std::abs(s.value - phase / tetra.evaluate_unchecked(s.at)) < 1e-12);
  }

  CHECK_THROWS_WITH_AS(sample_grid(pair, win, 1, 5), "grid needs nx, ny >= 2", std::domain_error);
}

TEST_CASE("circular orbits close onto themselves with the right circumference") {
  // i dz/z makes the dual field -iz, whose orbits are circles around 0.
  const RationalOneForm pair = test_support::bundled("two_pole");
  const Trajectory unit = integrate_streamline(pair, Complex(1.0, 0.0));
  CHECK(unit.status == TrajectoryStatus::closed);
  CHECK(unit.closed);
  CHECK(std::abs(unit.points.back() - unit.points.front()) <= 1e-3);
  CHECK(unit.arc_length == doctest::Approx(2.0 * kPi).epsilon(2e-3));

  const Trajectory big = integrate_streamline(pair, Complex(0.0, 2.0));
  CHECK(big.closed);
  CHECK(big.arc_length == doctest::Approx(4.0 * kPi).epsilon(2e-3));

  const Trajectory reversed = integrate_streamline(pair, Complex(1.0, 0.0), 0.0, 40.0, 1e-8,
                                                   nullptr, 1e-3, 200000, -1);
  CHECK(reversed.closed);
  CHECK(reversed.arc_length == doctest::Approx(2.0 * kPi).epsilon(2e-3));
}

TEST_CASE("streamlines stop at the window edge") {
  const RationalOneForm pair = test_support::bundled("two_pole");
  const Window tight{0.5, 1.5, -0.5, 0.5};
  const Trajectory tr = integrate_streamline(pair, Complex(1.0, 0.0), 0.0, 40.0, 1e-8, &tight);
  CHECK(tr.status == TrajectoryStatus::left_window);
  CHECK_FALSE(tr.closed);
  CHECK_FALSE(tight.contains(tr.points.back()));
  CHECK(tr.arc_length < 2.0 * kPi);
}

TEST_CASE("the rectifying coordinate stays real along streamlines") {
  // d Psi = f dz is real by construction along the flow, so the imaginary
  // drift measures pure integration error.
  const RationalOneForm octa = test_support::bundled("octahedral");
  int checked = 0;
  for (const Complex seed : {Complex(0.35, 0.15), Complex(-0.85, 0.55), Complex(1.45, -0.95),
                             Complex(0.25, -1.15), Complex(-1.65, -0.35), Complex(2.15, 0.75)}) {
    const Trajectory tr = integrate_streamline(octa, seed);
    if (tr.arc_length < 0.5) continue;
    CHECK(tr.psi_drift <= 1e-5 * tr.arc_length);
    ++checked;
  }
  CHECK(checked >= 4);

  const Trajectory turned = integrate_streamline(test_support::bundled("d2_quartic"),
                                                 Complex(0.45, 0.3), 0.7);
  CHECK(turned.arc_length > 0.1);
  CHECK(turned.psi_drift <= 1e-5 * turned.arc_length);
}

TEST_CASE("four separatrices emanate from every finite zero") {
  const RationalOneForm tetra = test_support::bundled("tetrahedral");
  const auto seps = separatrices(tetra);
  REQUIRE(tetra.finite_zeros().size() == 6);
  REQUIRE(seps.size() == 24);
  for (const Complex& q : tetra.finite_zeros()) {
    int from_q = 0;
    for (const auto& tr : seps) {
      REQUIRE(tr.origin.has_value());
      if (points_equal(*tr.origin, SpherePoint::from_complex(q), kEps)) ++from_q;
    }
    CHECK(from_q == 4);
  }
  for (const auto& tr : seps) {
    CHECK(tr.kind == TrajectoryKind::separatrix);
    CHECK(tr.points.size() >= 2);
    CHECK((tr.status == TrajectoryStatus::hit_guard || tr.status == TrajectoryStatus::max_length));
    CHECK(tr.psi_drift <= 1e-5 * std::max(tr.arc_length, 1e-3));
  }
}

TEST_CASE("separatrix rays leave along the real directions of the local model") {
  // The quartic quotient has its only finite zero at 0 with slope -1, so the
  // four rays of theta = 0 start along the axis directions 1, i, -1, -i.
  const RationalOneForm f = test_support::bundled("d2_quartic");
  const auto seps = separatrices(f);
  REQUIRE(seps.size() == 4);
  std::vector<bool> seen(4, false);
  for (const auto& tr : seps) {
    REQUIRE(tr.points.size() >= 2);
    const Complex dir = tr.points.front();  // seed relative to the zero at 0
    const double angle = std::arg(dir);
    for (int m = 0; m < 4; ++m)
      if (std::abs(std::remainder(angle - m * kPi / 2.0, 2.0 * kPi)) < 1e-9) seen[m] = true;
  }
  CHECK(std::count(seen.begin(), seen.end(), true) == 4);
}

TEST_CASE("rendered portraits are byte identical and carry the marker census") {
  const RationalOneForm tetra = test_support::bundled("tetrahedral");
  PortraitOptions opts;
  opts.seeds_per_axis = 4;
  const std::string svg = render_svg(tetra, opts);
  const std::string again = render_svg(tetra, opts);
  CHECK(svg == again);

  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\"")
        != std::string::npos);
  CHECK(svg.find("clipPath id=\"win\"") != std::string::npos);
  CHECK(count_substring(svg, "class=\"pole-marker\"") == 7);
  CHECK(count_substring(svg, "class=\"zero-marker\"") == 6);
  CHECK(svg.find("pole at infinity") != std::string::npos);
  CHECK(svg.find("zero at infinity") == std::string::npos);
  CHECK(count_substring(svg, "<polyline") > 4);

  PortraitOptions with_sphere = opts;
  with_sphere.sphere_panel = true;
  const std::string two = render_svg(tetra, with_sphere);
  CHECK(two.find("r=\"173.600\"") != std::string::npos);
  CHECK(two.size() > svg.size());
}

TEST_CASE("status names cover every outcome") {
  CHECK(status_name(TrajectoryStatus::max_length) == "max_length");
  CHECK(status_name(TrajectoryStatus::hit_guard) == "hit_guard");
  CHECK(status_name(TrajectoryStatus::left_window) == "left_window");
  CHECK(status_name(TrajectoryStatus::closed) == "closed");
  CHECK(status_name(TrajectoryStatus::step_underflow) == "step_underflow");
  CHECK(status_name(TrajectoryStatus::step_cap) == "step_cap");
}
