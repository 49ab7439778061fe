#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "sphereforms/groups.hpp"
#include "sphereforms/mobius.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

enum class PolyKind {
  tetrahedron,
  octahedron,
  cube,
  icosahedron,
  dodecahedron,
  dihedron,
  hosohedron
};

inline std::string kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::tetrahedron: return "tetrahedron";
    case PolyKind::octahedron: return "octahedron";
    case PolyKind::cube: return "cube";
    case PolyKind::icosahedron: return "icosahedron";
    case PolyKind::dodecahedron: return "dodecahedron";
    case PolyKind::dihedron: return "dihedron";
    case PolyKind::hosohedron: return "hosohedron";
  }
  throw std::logic_error("unreachable polyhedron kind");
}

/// Expected (v, e, f) for each kind; n used by dihedron/hosohedron.
inline std::array<int, 3> expected_counts(PolyKind k, int n = 0) {
  switch (k) {
    case PolyKind::tetrahedron: return {4, 6, 4};
    case PolyKind::octahedron: return {6, 12, 8};
    case PolyKind::cube: return {8, 12, 6};
    case PolyKind::icosahedron: return {12, 30, 20};
    case PolyKind::dodecahedron: return {20, 30, 12};
    case PolyKind::dihedron: return {n, n, 2};
    case PolyKind::hosohedron: return {2, n, n};
  }
  throw std::logic_error("unreachable polyhedron kind");
}

/// A conformally embedded regular spherical polyhedron: its symmetry group
/// together with the three exceptional orbits (vertices, edge midpoints,
/// face centers). Faces and edges appear only through these point orbits.
struct MobiusPolyhedron {
  PolyKind kind = PolyKind::tetrahedron;
  int n = 0;  // dihedron/hosohedron parameter
  PointMultiset vertices;
  PointMultiset edge_midpoints;
  PointMultiset face_centers;
  FiniteMobiusGroup group;
};

namespace detail {

inline void validate_polyhedron(const MobiusPolyhedron& P) {
  const auto want = expected_counts(P.kind, P.n);
  const int v = static_cast<int>(P.vertices.size());
  const int e = static_cast<int>(P.edge_midpoints.size());
  const int f = static_cast<int>(P.face_centers.size());
  if (v != want[0] || e != want[1] || f != want[2])
    throw std::logic_error("polyhedron orbit counts do not match its combinatorics");
  if (v - e + f != 2) throw std::logic_error("polyhedron violates the Euler relation");
  PointMultiset all = P.vertices;
  all.insert(all.end(), P.edge_midpoints.begin(), P.edge_midpoints.end());
  all.insert(all.end(), P.face_centers.begin(), P.face_centers.end());
  if (!pairwise_separated(all))
    throw std::logic_error("polyhedron special points are not pairwise distinct");
}

inline MobiusPolyhedron dual_of(MobiusPolyhedron P, PolyKind kind) {
  std::swap(P.vertices, P.face_centers);
  P.kind = kind;
  validate_polyhedron(P);
  return P;
}

}  // namespace detail

inline MobiusPolyhedron canonical_polyhedron(PolyKind kind, int n = 0) {
  MobiusPolyhedron P;
  P.kind = kind;
  switch (kind) {
    case PolyKind::tetrahedron: {
      P.group = canonical_group({GroupType::tetra, 0});
      const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
      const Complex b = (s6 / (3.0 + s3)) * std::polar(1.0, kPi / 3.0);
      P.vertices = orbit(P.group, SpherePoint::from_complex(1.0 / s2));
      P.edge_midpoints = orbit(P.group, SpherePoint::from_complex(b));
      P.face_centers = orbit(P.group, SpherePoint());
      break;
    }
    case PolyKind::octahedron: {
      P.group = canonical_group({GroupType::octa, 0});
      const Complex e_seed = std::polar(1.0, kPi / 4.0);
      const Complex f_seed = std::sqrt(2.0 - std::sqrt(3.0)) * std::polar(1.0, kPi / 4.0);
      P.vertices = orbit(P.group, SpherePoint());
      P.edge_midpoints = orbit(P.group, SpherePoint::from_complex(e_seed));
      P.face_centers = orbit(P.group, SpherePoint::from_complex(f_seed));
      break;
    }
    case PolyKind::cube:
      return detail::dual_of(canonical_polyhedron(PolyKind::octahedron), PolyKind::cube);
    case PolyKind::icosahedron: {
      P.group = canonical_group({GroupType::icosa, 0});
      const MobiusMap t5 = MobiusMap::rotation(5);
      const MobiusMap t6 = canonical_generators({GroupType::icosa, 0})[1];
      const SpherePoint v0;  // 0 is a vertex; its orbit contains infinity
      const SpherePoint v1 = t6.apply(v0);
      const SpherePoint v2 = t5.apply(v1);
      P.vertices = orbit(P.group, v0);
      P.edge_midpoints = orbit(P.group, sphere_arc_midpoint(v0, v1));
      P.face_centers = orbit(P.group, sphere_circumcenter(v0, v1, v2));
      break;
    }
    case PolyKind::dodecahedron:
      return detail::dual_of(canonical_polyhedron(PolyKind::icosahedron),
                             PolyKind::dodecahedron);
    case PolyKind::dihedron: {
      if (n < 2) throw std::domain_error("dihedron needs n >= 2");
      P.n = n;
      P.group = canonical_group({GroupType::dihedral, n});
      P.vertices = orbit(P.group, SpherePoint::from_complex(1.0));
      P.edge_midpoints = orbit(P.group, SpherePoint::from_complex(std::polar(1.0, kPi / n)));
      P.face_centers = orbit(P.group, SpherePoint());
      break;
    }
    case PolyKind::hosohedron:
      return detail::dual_of(canonical_polyhedron(PolyKind::dihedron, n), PolyKind::hosohedron);
  }
  detail::validate_polyhedron(P);
  return P;
}

inline PointMultiset special_points(const MobiusPolyhedron& P) {
  PointMultiset all = P.vertices;
  all.insert(all.end(), P.edge_midpoints.begin(), P.edge_midpoints.end());
  all.insert(all.end(), P.face_centers.begin(), P.face_centers.end());
  return all;
}

/// Antipodal correspondence on the special points (z -> -1/conj(z), the R^3
/// point negation, which the canonical metrically regular embeddings respect).
inline SpherePoint antipode(const MobiusPolyhedron& P, const SpherePoint& p, double eps = kEps) {
  if (!contains_point(special_points(P), p, eps))
    throw std::domain_error("antipode: point is not a special point of the polyhedron");
  const SpherePoint q = p.antipodal();
  if (!contains_point(special_points(P), q, eps))
    throw std::logic_error("antipode left the special point set");
  return q;
}

}  // namespace sphereforms
