#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sphereforms/groups.hpp"
#include "sphereforms/isotropy.hpp"
#include "sphereforms/mobius.hpp"
#include "sphereforms/oneform.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

namespace detail {

/// Angular distance between two directions modulo pi (lines through 0).
inline double line_angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

}  // namespace detail

/// Residue-based isochrony data. The dual field X = (1/f) d/dz has centers
/// at all poles of eta exactly when every residue is purely imaginary;
/// rotatable means some e^{i theta} eta is isochronous, which holds exactly
/// when the residues lie on one line through the origin.
struct IsochronyReport {
  std::vector<Residue> residues;
  bool is_isochronous = false;
  bool rotatable = false;
  std::optional<double> theta;  // smallest value in [0, pi); 0 when isochronous
  double collinearity_defect = 0.0;
};

/// strict_two_pole: a two-pole form conjugates to lambda dz/z, whose closed
/// orbits surround both poles only in the purely-imaginary case; the stricter
/// reading that a true center demands zero residue is exposed by this flag
/// and makes every k=2 form with nonzero residues report not isochronous.
inline IsochronyReport isochrony_report(const RationalOneForm& f, bool strict_two_pole = false,
                                        double angular_eps = kAngularEps) {
  IsochronyReport rep;
  rep.residues = residues(f);

  std::vector<double> angles;
  for (const auto& r : rep.residues)
    if (std::abs(r.value) > 1e-300) angles.push_back(std::arg(r.value));

  double dev_imag = 0.0;
  for (const double a : angles)
    dev_imag = std::max(dev_imag, detail::line_angle_distance(a, kPi / 2));
  rep.is_isochronous = dev_imag <= angular_eps;

  // Doubled angles identify directions modulo pi; their mean is the best
  // common line, and the defect is the worst deviation from it.
  Complex doubled = 0.0;
  for (const double a : angles) doubled += std::polar(1.0, 2.0 * a);
  if (std::abs(doubled) < 1e-12) {
    rep.collinearity_defect = kPi / 2;  // perfectly spread directions
  } else {
    const double mean = std::arg(doubled) / 2.0;
    for (const double a : angles)
      rep.collinearity_defect = std::max(rep.collinearity_defect,
                                         detail::line_angle_distance(a, mean));
    rep.rotatable = rep.collinearity_defect <= angular_eps;
    if (rep.rotatable) {
      if (rep.is_isochronous) {
        rep.theta = 0.0;
      } else {
        double t = std::fmod(kPi / 2 - mean, kPi);
        if (t < 0) t += kPi;
        if (kPi - t <= angular_eps) t = 0.0;
        rep.theta = t;
      }
    }
  }

  // Tolerance consistency: purely imaginary residues are collinear, even if
  // the two tolerance tests straddle the boundary differently.
  if (rep.is_isochronous) {
    rep.rotatable = true;
    rep.theta = 0.0;
  }

  if (strict_two_pole && f.poles().size() == 2) {
    rep.is_isochronous = false;
    rep.theta.reset();
    rep.rotatable = false;
  }
  return rep;
}

struct MirrorPairing {
  SpherePoint from, to;
  bool is_pole = false;
};

/// Witness for the geometric sufficient condition: a circle E (spanned by
/// three fixed points of the reflection) whose reflection permutes poles and
/// zeros within their G-orbits.
struct MirrorCertificate {
  std::array<SpherePoint, 3> circle_points;
  AntiMobiusMap reflection;
  std::vector<MirrorPairing> pairings;
};

/// Search for a mirror circle: any qualifying reflection permutes the poles,
/// so it is determined by the images of three of them. Enumerates ordered
/// pole triples from the fixed most-separated source triple, keeps genuine
/// reflections preserving both multisets with every image in its source's
/// G-orbit, and returns the first certificate in enumeration order.
inline std::optional<MirrorCertificate> mirror_search(const RationalOneForm& f,
                                                      const FiniteMobiusGroup& G,
                                                      double eps = kEps) {
  if (G.size() < 2) throw std::domain_error("mirror search needs a nontrivial isotropy group");
  const PointMultiset& P = f.poles();
  const PointMultiset& Z = f.zeros();
  const std::size_t k = P.size();
  if (k < 3) throw std::domain_error("mirror search needs at least three poles");

  // Orbit id of every pole and zero under G, for the orbit-containment test.
  auto orbit_ids = [&](const PointMultiset& pts) {
    std::vector<int> ids(pts.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (ids[i] >= 0) continue;
      const PointMultiset orb = orbit(G, pts[i], eps);
      for (std::size_t j = i; j < pts.size(); ++j)
        if (ids[j] < 0 && contains_point(orb, pts[j], eps)) ids[j] = next;
      ++next;
    }
    return ids;
  };
  const std::vector<int> pole_orbit = orbit_ids(P);
  const std::vector<int> zero_orbit = orbit_ids(Z);

  const auto src_idx = detail::most_separated_triple(P);
  const std::array<SpherePoint, 3> src{P[src_idx[0]], P[src_idx[1]], P[src_idx[2]]};
  const double band = kProbeGuardFactor * eps;
  const detail::NearDetector pole_det(P, band), zero_det(Z, band);

  auto image_index = [&](const SpherePoint& q, const PointMultiset& pts) -> std::optional<std::size_t> {
    for (std::size_t m = 0; m < pts.size(); ++m)
      if (points_equal(q, pts[m], band)) return m;
    return std::nullopt;
  };

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j) continue;
        const AntiMobiusMap sigma = anti_from_three_pairs(src, {P[i], P[j], P[l]});
        if (!is_reflection(sigma, 1e-6)) continue;

        bool ok = true;
        for (const auto& p : P)
          if (pole_det.nearest_within(sigma.apply(p)) > band) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (const auto& q : Z)
          if (zero_det.nearest_within(sigma.apply(q)) > band) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (!multisets_equal(transport(sigma, P), P, band)) continue;
        if (!multisets_equal(transport(sigma, Z), Z, band)) continue;

        MirrorCertificate cert;
        cert.reflection = sigma;
        for (std::size_t m = 0; m < P.size() && ok; ++m) {
          const SpherePoint q = sigma.apply(P[m]);
          const auto t = image_index(q, P);
          if (!t || pole_orbit[*t] != pole_orbit[m])
            ok = false;
          else
            cert.pairings.push_back({P[m], P[*t], true});
        }
        for (std::size_t m = 0; m < Z.size() && ok; ++m) {
          const SpherePoint q = sigma.apply(Z[m]);
          const auto t = image_index(q, Z);
          if (!t || zero_orbit[*t] != zero_orbit[m])
            ok = false;
          else
            cert.pairings.push_back({Z[m], Z[*t], false});
        }
        if (!ok) continue;

        cert.circle_points = fixed_circle_points(sigma);
        return cert;
      }
    }
  return std::nullopt;
}

/// The mirror implication as an executable property: a valid certificate
/// implies the form is rotatable; returns the rotation angle.
inline double sufficient_condition_implies(const RationalOneForm& f,
                                           const MirrorCertificate& cert, double eps = kEps) {
  const double band = kProbeGuardFactor * eps;
  if (!is_reflection(cert.reflection, 1e-6) ||
      !multisets_equal(transport(cert.reflection, f.poles()), f.poles(), band) ||
      !multisets_equal(transport(cert.reflection, f.zeros()), f.zeros(), band))
    throw std::domain_error("invalid mirror certificate");
  const IsochronyReport rep = isochrony_report(f);
  if (!rep.rotatable)
    throw std::logic_error("mirror certificate without residue collinearity");
  return *rep.theta;
}

/// The quadratic differential eta (x) eta carries Langer polyhedral geometry
/// exactly when eta is isochronous.
inline bool has_polyhedral_geometry(const RationalOneForm& f) {
  return isochrony_report(f).is_isochronous;
}

}  // namespace sphereforms
