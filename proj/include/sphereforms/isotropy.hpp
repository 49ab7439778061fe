#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphereforms/groups.hpp"
#include "sphereforms/mobius.hpp"
#include "sphereforms/oneform.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

namespace detail {

/// Indices of three pairwise chordally well-separated points: the farthest
/// pair, then the point maximizing the min distance to both. Deterministic
/// (first index wins ties), so candidate enumeration order is reproducible.
inline std::array<std::size_t, 3> most_separated_triple(const PointMultiset& pts) {
  if (pts.size() < 3) throw std::domain_error("triple selection needs three points");
  std::size_t a = 0, b = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = chordal_distance(pts[i], pts[j]);
      if (d > best) {
        best = d;
        a = i;
        b = j;
      }
    }
  std::size_t c = pts.size();
  best = -1.0;
  for (std::size_t l = 0; l < pts.size(); ++l) {
    if (l == a || l == b) continue;
    const double d = std::min(chordal_distance(pts[l], pts[a]), chordal_distance(pts[l], pts[b]));
    if (d > best) {
      best = d;
      c = l;
    }
  }
  return {a, b, c};
}

inline double nearest_chordal(const SpherePoint& p, const PointMultiset& set) {
  double best = 4.0;
  for (const auto& q : set) best = std::min(best, chordal_distance(p, q));
  return best;
}

/// Nearest-neighbor screening against a fixed point set, exploiting that the
/// chordal metric is the Euclidean metric of the R^3 embeddings: entries are
/// sorted by x so a query only scans the slab |x - qx| <= radius.
class NearDetector {
 public:
  NearDetector(const PointMultiset& pts, double radius) : radius_(radius) {
    for (const auto& p : pts) entries_.push_back(p.embed3());
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
  }

  /// Distance to the nearest entry if within radius, otherwise +infinity.
  double nearest_within(const SpherePoint& p) const {
    const std::array<double, 3> e = p.embed3();
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e[0] - radius_,
                               [](const auto& a, double x) { return a[0] < x; });
    double best2 = radius_ * radius_;
    bool hit = false;
    for (; it != entries_.end() && (*it)[0] <= e[0] + radius_; ++it) {
      const double dx = e[0] - (*it)[0], dy = e[1] - (*it)[1], dz = e[2] - (*it)[2];
      const double d2 = dx * dx + dy * dy + dz * dz;
      if (d2 <= best2) {
        best2 = d2;
        hit = true;
      }
    }
    return hit ? std::sqrt(best2) : std::numeric_limits<double>::infinity();
  }

 private:
  double radius_;
  std::vector<std::array<double, 3>> entries_;
};

/// Max relative mismatch between the transported form and f at three regular
/// probes; the transported form is evaluated directly as f(S(w)) S'(w) with
/// S = T^{-1}, which avoids rebuilding the root products. Probes whose
/// preimage lands near a special point are skipped.
inline double pushforward_residual(const RationalOneForm& f, const MobiusMap& T, double eps) {
  const MobiusMap S = T.inverse();
  const auto probes = regular_probes({&f.zeros(), &f.poles()}, 12, eps);
  double worst = 0.0;
  int used = 0;
  for (const Complex& w : probes) {
    const SpherePoint swp = S.apply(SpherePoint::from_complex(w));
    if (swp.is_infinity() || std::abs(swp.value()) > 1e8) continue;
    if (nearest_chordal(swp, f.poles()) <= kProbeGuardFactor * eps) continue;
    if (nearest_chordal(swp, f.zeros()) <= kProbeGuardFactor * eps) continue;
    const Complex a = f.evaluate_unchecked(swp.value()) * S.derivative(w);
    const Complex b = f.evaluate_unchecked(w);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    if (++used == 3) return worst;
  }
  throw std::logic_error("could not place probe points for the invariance test");
}

}  // namespace detail

struct OrbitEntry {
  SpherePoint representative;  // lexicographically smallest member
  int size = 0;
  bool full = false;  // size == |G|
  bool is_pole = false;
};

struct OrbitReport {
  std::vector<OrbitEntry> entries;
  int l1 = 0;  // full zero orbits
  int l2 = 0;  // full pole orbits
};

/// A candidate whose invariance residual fell between the accept tolerance
/// and kProbeGuardFactor times it: reported rather than silently decided.
struct BorderlineWarning {
  MobiusMap candidate;
  double residual = 0.0;
};

enum class IsotropyKind { continuous_cstar, finite };

struct IsotropyResult {
  IsotropyKind kind = IsotropyKind::finite;
  /// Two-pole case only: sends pole1 -> 0, pole2 -> infinity, a probe -> 1,
  /// conjugating the form to lambda dz/z.
  std::optional<MobiusMap> conjugator;
  FiniteMobiusGroup group;  // trivial {id} in the continuous case
  OrbitReport orbits;
  std::vector<BorderlineWarning> warnings;
};

/// Partition pts into orbits of G; each entry records the smallest member as
/// representative, the orbit size, and whether the orbit is full (size |G|).
inline std::vector<OrbitEntry> partition_orbits(const FiniteMobiusGroup& G,
                                                const PointMultiset& pts, bool is_pole,
                                                double eps = kEps) {
  std::vector<OrbitEntry> out;
  std::vector<bool> seen(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (seen[i]) continue;
    const PointMultiset orb = orbit(G, pts[i], eps);
    for (std::size_t j = i; j < pts.size(); ++j)
      if (!seen[j] && contains_point(orb, pts[j], eps)) seen[j] = true;
    OrbitEntry e;
    e.representative = orbit_representative(orb);
    e.size = static_cast<int>(orb.size());
    e.full = orb.size() == G.elements.size();
    e.is_pole = is_pole;
    out.push_back(e);
  }
  return out;
}

/// The isotropy group of eta under pushforward. Two poles: the continuous
/// C* case with a normalizing conjugator. Otherwise every Moebius map
/// preserving eta must send the fixed source triple of poles to some ordered
/// pole triple; all k(k-1)(k-2) candidates are screened by pole-set, zero-set
/// and form invariance, then validated as a closed finite group.
inline IsotropyResult isotropy(const RationalOneForm& f, double eps = kEps) {
  const PointMultiset& P = f.poles();
  const PointMultiset& Z = f.zeros();
  const std::size_t k = P.size();
  IsotropyResult out;

  if (k == 2) {
    out.kind = IsotropyKind::continuous_cstar;
    const auto probes = regular_probes({&f.zeros(), &f.poles()}, 1, eps);
    out.conjugator = from_three_pairs(
        {P[0], P[1], SpherePoint::from_complex(probes[0])},
        {SpherePoint::from_complex(0.0), SpherePoint::infinity(), SpherePoint::from_complex(1.0)});
    out.group = FiniteMobiusGroup{{MobiusMap::identity()}, GroupTypeTag{GroupType::trivial, 0}};
    for (const auto& p : P) out.orbits.entries.push_back({p, 1, false, true});
    return out;
  }

  const auto src_idx = detail::most_separated_triple(P);
  const std::array<SpherePoint, 3> src{P[src_idx[0]], P[src_idx[1]], P[src_idx[2]]};
  const double band = kProbeGuardFactor * eps;
  const detail::NearDetector pole_det(P, band), zero_det(Z, band);
  // Source-triple images are poles by construction; screen the others first.
  std::vector<std::size_t> check_idx;
  for (std::size_t m = 0; m < k; ++m)
    if (m != src_idx[0] && m != src_idx[1] && m != src_idx[2]) check_idx.push_back(m);

  std::vector<MobiusMap> accepted;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j) continue;
        const MobiusMap T = from_three_pairs(src, {P[i], P[j], P[l]});

        double residual = 0.0;
        bool inside_band = true;
        for (const std::size_t m : check_idx) {
          const double d = pole_det.nearest_within(T.apply(P[m]));
          if (d > band) {
            inside_band = false;
            break;
          }
          residual = std::max(residual, d);
        }
        if (!inside_band) continue;
        for (const auto& q : Z) {
          const double d = zero_det.nearest_within(T.apply(q));
          if (d > band) {
            inside_band = false;
            break;
          }
          residual = std::max(residual, d);
        }
        if (!inside_band) continue;

        // Proximity alone does not give a bijection; require a matching.
        const bool matched = multisets_equal(transport(T, P), P, band) &&
                             multisets_equal(transport(T, Z), Z, band);
        if (matched) residual = std::max(residual, detail::pushforward_residual(f, T, eps));

        if (matched && residual <= eps)
          accepted.push_back(T);
        else if (residual <= band)
          out.warnings.push_back({T, residual});
      }
    }

  // The identity comes from the source triple mapped to itself.
  std::vector<MobiusMap> elements{MobiusMap::identity()};
  for (const auto& T : accepted) {
    bool known = false;
    for (const auto& E : elements)
      if (maps_equal(T, E, band)) known = true;
    if (!known) elements.push_back(T);
  }

  // Validation: the surviving set must already be a finite group.
  for (const auto& a : elements)
    for (const auto& b : elements) {
      const MobiusMap ab = compose(a, b);
      bool found = false;
      for (const auto& e : elements)
        if (maps_equal(ab, e, band)) found = true;
      if (!found) throw std::logic_error("isotropy candidates do not close under composition");
    }

  out.kind = IsotropyKind::finite;
  out.group.elements = std::move(elements);
  out.group.tag = identify_type(out.group);
  out.orbits.entries = partition_orbits(out.group, Z, false, eps);
  {
    auto pole_entries = partition_orbits(out.group, P, true, eps);
    for (const auto& e : out.orbits.entries) out.orbits.l1 += e.full ? 1 : 0;
    for (const auto& e : pole_entries) out.orbits.l2 += e.full ? 1 : 0;
    out.orbits.entries.insert(out.orbits.entries.end(), pole_entries.begin(), pole_entries.end());
  }
  return out;
}

/// One axis endpoint of an element of order >= 2 that breaks condition 3:
/// order-2 fixed points must be poles or zeros, higher-order fixed points
/// must be poles.
struct Cond3Failure {
  MobiusMap element;
  int order = 0;
  SpherePoint fixed_point;
  std::string reason;
};

struct CharacterizationReport {
  bool cond1 = false;  // g(P) = P for all g in G
  bool cond2 = false;  // g(Z) = Z for all g in G
  std::vector<Cond3Failure> cond3_failures;
  bool maximal = false;  // computed isotropy equals G as a set
  bool cond3() const { return cond3_failures.empty(); }
  bool all() const { return cond1 && cond2 && cond3() && maximal; }
};

/// Necessary conditions for G-invariance plus maximality. Conditions 1-2 are
/// multiset invariance under every element; condition 3 inspects the fixed
/// axes (each axis checked at the maximal order attained on it); maximality
/// reruns the full isotropy computation and compares groups.
inline CharacterizationReport check_characterization(const RationalOneForm& f,
                                                     const FiniteMobiusGroup& G,
                                                     double eps = kEps) {
  CharacterizationReport rep;
  rep.cond1 = true;
  rep.cond2 = true;
  for (const auto& g : G.elements) {
    if (rep.cond1 && !multisets_equal(transport(g, f.poles()), f.poles(), eps)) rep.cond1 = false;
    if (rep.cond2 && !multisets_equal(transport(g, f.zeros()), f.zeros(), eps)) rep.cond2 = false;
  }

  for (const auto& axis : nontrivial_fixed_points(G)) {
    for (const SpherePoint* fp : {&axis.x, &axis.y}) {
      const bool in_p = contains_point(f.poles(), *fp, eps);
      const bool in_z = contains_point(f.zeros(), *fp, eps);
      const std::string ord = std::to_string(axis.order);
      if (axis.order == 2) {
        if (!in_p && !in_z)
          rep.cond3_failures.push_back(
              {axis.representative, axis.order, *fp, "order-" + ord + " element fixes a regular point"});
      } else if (!in_p) {
        rep.cond3_failures.push_back(
            {axis.representative, axis.order, *fp,
             in_z ? "order-" + ord + " element fixes a zero"
                  : "order-" + ord + " element fixes a regular point"});
      }
    }
  }

  const IsotropyResult iso = isotropy(f, eps);
  rep.maximal = iso.kind == IsotropyKind::finite && groups_equal(iso.group, G, eps);
  return rep;
}

/// For an icosahedral group the axis condition is automatic: conditions 1-2
/// alone already decide invariance.
inline bool check_a5_shortcut(const RationalOneForm& f, const FiniteMobiusGroup& G,
                              double eps = kEps) {
  if (identify_type(G).type != GroupType::icosa)
    throw std::domain_error("shortcut requires an icosahedral group");
  for (const auto& g : G.elements) {
    if (!multisets_equal(transport(g, f.poles()), f.poles(), eps)) return false;
    if (!multisets_equal(transport(g, f.zeros()), f.zeros(), eps)) return false;
  }
  return true;
}

}  // namespace sphereforms
