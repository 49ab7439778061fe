#include "doctest.h"
#include "sphereforms/polyhedra.hpp"

using namespace sphereforms;

namespace {

void check_counts(const MobiusPolyhedron& P, int v, int e, int f) {
  CHECK(static_cast<int>(P.vertices.size()) == v);
  CHECK(static_cast<int>(P.edge_midpoints.size()) == e);
  CHECK(static_cast<int>(P.face_centers.size()) == f);
  CHECK(v - e + f == 2);
}

}  // namespace

TEST_CASE("canonical polyhedra have the right orbit counts") {
  check_counts(canonical_polyhedron(PolyKind::tetrahedron), 4, 6, 4);
  check_counts(canonical_polyhedron(PolyKind::octahedron), 6, 12, 8);
  check_counts(canonical_polyhedron(PolyKind::cube), 8, 12, 6);
  check_counts(canonical_polyhedron(PolyKind::icosahedron), 12, 30, 20);
  check_counts(canonical_polyhedron(PolyKind::dodecahedron), 20, 30, 12);
  check_counts(canonical_polyhedron(PolyKind::dihedron, 5), 5, 5, 2);
  check_counts(canonical_polyhedron(PolyKind::hosohedron, 5), 2, 5, 5);
}

TEST_CASE("special point orbits are invariant under the symmetry group") {
  for (PolyKind kind : {PolyKind::tetrahedron, PolyKind::octahedron, PolyKind::icosahedron}) {
    const MobiusPolyhedron P = canonical_polyhedron(kind);
    for (const auto& g : P.group.elements) {
      CHECK(multisets_equal(transport(g, P.vertices), P.vertices));
      CHECK(multisets_equal(transport(g, P.edge_midpoints), P.edge_midpoints));
      CHECK(multisets_equal(transport(g, P.face_centers), P.face_centers));
    }
  }
}

TEST_CASE("group axis points are exactly the special points") {
  for (PolyKind kind : {PolyKind::tetrahedron, PolyKind::octahedron, PolyKind::icosahedron}) {
    const MobiusPolyhedron P = canonical_polyhedron(kind);
    const PointMultiset special = special_points(P);
    const auto axes = nontrivial_fixed_points(P.group);
    PointMultiset axis_points;
    for (const auto& ax : axes) {
      axis_points.push_back(ax.x);
      axis_points.push_back(ax.y);
    }
    CHECK(multisets_equal(axis_points, special));
  }
}

TEST_CASE("duality swaps vertices and face centers and preserves the group") {
  const MobiusPolyhedron octa = canonical_polyhedron(PolyKind::octahedron);
  const MobiusPolyhedron cube = canonical_polyhedron(PolyKind::cube);
  CHECK(multisets_equal(octa.vertices, cube.face_centers));
  CHECK(multisets_equal(octa.face_centers, cube.vertices));
  CHECK(multisets_equal(octa.edge_midpoints, cube.edge_midpoints));
  CHECK(groups_equal(octa.group, cube.group));
}

TEST_CASE("antipodal map permutes each special orbit") {
  const MobiusPolyhedron P = canonical_polyhedron(PolyKind::icosahedron);
  for (const auto& v : P.vertices) CHECK(contains_point(P.vertices, antipode(P, v)));
  for (const auto& e : P.edge_midpoints)
    CHECK(contains_point(P.edge_midpoints, antipode(P, e)));
  CHECK_THROWS_AS(antipode(P, SpherePoint::from_complex({0.123, 0.456})), std::domain_error);
}

TEST_CASE("dihedron vertices are the n-th roots of unity") {
  const MobiusPolyhedron P = canonical_polyhedron(PolyKind::dihedron, 6);
  for (int k = 0; k < 6; ++k)
    CHECK(contains_point(P.vertices, SpherePoint::from_complex(std::polar(1.0, 2 * kPi * k / 6))));
  CHECK(contains_point(P.face_centers, SpherePoint::from_complex({0, 0})));
  CHECK(contains_point(P.face_centers, SpherePoint::infinity()));
  CHECK_THROWS_AS(canonical_polyhedron(PolyKind::dihedron, 1), std::domain_error);
}
