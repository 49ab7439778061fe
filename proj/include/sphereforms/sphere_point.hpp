#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sphereforms {

using Complex = std::complex<double>;

/// Global chordal matching tolerance. Double-precision Moebius chains of
/// length <= 60 lose at most ~6 digits, so 1e-8 separates "equal" from
/// "distinct" with a wide margin for every configuration handled here.
inline constexpr double kEps = 1e-8;
/// Tolerance for residue-sum identities.
inline constexpr double kResidueEps = 1e-7;
/// Angular tolerance (radians) for purely-imaginary / collinearity tests.
inline constexpr double kAngularEps = 1e-6;
/// Tolerance band around trace^2 = 4 separating parabolic from elliptic.
inline constexpr double kTraceBandEps = 1e-7;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// A point of the Riemann sphere as a projective pair [num : den].
/// Invariant: after normalization the max-modulus component is exactly 1,
/// so points near infinity are represented as stably as points near 0.
/// infinity is [1 : 0], a first-class point rather than a sentinel float.
class SpherePoint {
 public:
  SpherePoint() : num_(0.0, 0.0), den_(1.0, 0.0) {}

  /// Canonical pair of a finite value: [z : 1] when |z| < 1, else [1 : 1/z].
  /// Every constructor funnels through here (or to infinity()), so equal
  /// values always carry bitwise-identical pairs and serialization is
  /// reproducible regardless of how a point was computed.
  static SpherePoint from_complex(Complex z) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
      throw std::domain_error("sphere point: non-finite value");
    SpherePoint p;
    if (std::abs(z) >= 1.0) {
      p.num_ = Complex(1.0, 0.0);
      p.den_ = 1.0 / z;
    } else {
      p.num_ = z;
      p.den_ = Complex(1.0, 0.0);
    }
    return p;
  }

  static SpherePoint from_pair(Complex n, Complex d) {
    if (!(std::isfinite(n.real()) && std::isfinite(n.imag()) &&
          std::isfinite(d.real()) && std::isfinite(d.imag())))
      throw std::domain_error("sphere point: non-finite pair component");
    if (std::abs(n) == 0.0 && std::abs(d) == 0.0)
      throw std::domain_error("sphere point: zero projective pair");
    SpherePoint p;
    if (d == Complex(0.0, 0.0)) {
      p.num_ = Complex(1.0, 0.0);
      p.den_ = Complex(0.0, 0.0);
      return p;
    }
    const Complex z = n / d;
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag()))) {
      p.num_ = Complex(1.0, 0.0);  // quotient beyond double range
      p.den_ = Complex(0.0, 0.0);
      return p;
    }
    return from_complex(z);
  }

  static SpherePoint infinity() { return from_pair(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

  Complex num() const { return num_; }
  Complex den() const { return den_; }

  bool is_infinity() const { return den_ == Complex(0.0, 0.0); }

  /// Finite complex value; the caller must check is_infinity() first.
  Complex value() const {
    if (is_infinity()) throw std::domain_error("sphere point: value() of infinity");
    return num_ / den_;
  }

  /// Unit-sphere embedding in R^3; infinity maps to the north pole (0,0,1).
  std::array<double, 3> embed3() const {
    const Complex nd = num_ * std::conj(den_);
    const double n2 = std::norm(num_), d2 = std::norm(den_);
    const double s = n2 + d2;
    return {2.0 * nd.real() / s, 2.0 * nd.imag() / s, (n2 - d2) / s};
  }

  static SpherePoint from_embed3(const std::array<double, 3>& p) {
    // Choose the chart that keeps the denominator away from 0.
    if (p[2] < 0.5) return from_pair(Complex(p[0], p[1]), Complex(1.0 - p[2], 0.0));
    return from_pair(Complex(1.0 + p[2], 0.0), Complex(p[0], -p[1]));
  }

  /// R^3 antipode, i.e. z -> -1/conj(z) on the plane.
  SpherePoint antipodal() const { return from_pair(-std::conj(den_), std::conj(num_)); }

  /// Deterministic sort key: finite points by (re, im) rounded to 12 decimal
  /// digits (suppresses last-ulp noise from summation order), infinity last.
  std::pair<double, double> sort_key() const {
    if (is_infinity()) return {1e18, 1e18};
    const Complex z = value();
    auto r12 = [](double x) { return std::abs(x) < 1e5 ? std::round(x * 1e12) / 1e12 : x; };
    return {r12(z.real()), r12(z.imag())};
  }

 private:
  Complex num_, den_;
};

/// Chordal distance, the R^3 straight-line distance between embedded points.
/// Symmetric, zero iff projectively equal, maximum 2 (antipodal pair).
inline double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  const double cross = std::abs(a.num() * b.den() - b.num() * a.den());
  const double na = std::sqrt(std::norm(a.num()) + std::norm(a.den()));
  const double nb = std::sqrt(std::norm(b.num()) + std::norm(b.den()));
  return 2.0 * cross / (na * nb);
}

inline bool points_equal(const SpherePoint& a, const SpherePoint& b, double eps = kEps) {
  return chordal_distance(a, b) <= eps;
}

/// Midpoint of the shorter great-circle arc between two non-antipodal points.
inline SpherePoint sphere_arc_midpoint(const SpherePoint& a, const SpherePoint& b) {
  const auto pa = a.embed3(), pb = b.embed3();
  std::array<double, 3> m{pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2]};
  const double n = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
  if (n < 1e-12) throw std::domain_error("arc midpoint: antipodal endpoints");
  for (auto& c : m) c /= n;
  return SpherePoint::from_embed3(m);
}

/// Circumcenter of the spherical triangle (a,b,c), on the same side as the
/// triangle's centroid.
inline SpherePoint sphere_circumcenter(const SpherePoint& a, const SpherePoint& b,
                                       const SpherePoint& c) {
  const auto p1 = a.embed3(), p2 = b.embed3(), p3 = c.embed3();
  const std::array<double, 3> u{p1[0] - p2[0], p1[1] - p2[1], p1[2] - p2[2]};
  const std::array<double, 3> v{p2[0] - p3[0], p2[1] - p3[1], p2[2] - p3[2]};
  std::array<double, 3> n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                          u[0] * v[1] - u[1] * v[0]};
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (len < 1e-12) throw std::domain_error("circumcenter: collinear points");
  for (auto& x : n) x /= len;
  const double side = n[0] * (p1[0] + p2[0] + p3[0]) + n[1] * (p1[1] + p2[1] + p3[1]) +
                      n[2] * (p1[2] + p2[2] + p3[2]);
  if (side < 0.0)
    for (auto& x : n) x = -x;
  return SpherePoint::from_embed3(n);
}

/// Unordered collection of eps-separated points, each of multiplicity 1.
using PointMultiset = std::vector<SpherePoint>;

inline std::optional<std::size_t> index_of(const PointMultiset& s, const SpherePoint& p,
                                           double eps = kEps) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (points_equal(s[i], p, eps)) return i;
  return std::nullopt;
}

inline bool contains_point(const PointMultiset& s, const SpherePoint& p, double eps = kEps) {
  return index_of(s, p, eps).has_value();
}

/// True when no two entries are within eps of each other (simple-roots regime).
inline bool pairwise_separated(const PointMultiset& s, double eps = kEps) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (chordal_distance(s[i], s[j]) <= eps) return false;
  return true;
}

inline double min_pairwise_chordal(const PointMultiset& s) {
  double m = 4.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      m = std::min(m, chordal_distance(s[i], s[j]));
  return m;
}

namespace detail {
// Kuhn's augmenting-path maximum matching on the eps-adjacency graph.
inline bool try_augment(std::size_t i, const std::vector<std::vector<std::size_t>>& adj,
                        std::vector<int>& match_b, std::vector<char>& visited) {
  for (std::size_t j : adj[i]) {
    if (visited[j]) continue;
    visited[j] = 1;
    if (match_b[j] < 0 ||
        try_augment(static_cast<std::size_t>(match_b[j]), adj, match_b, visited)) {
      match_b[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}
}  // namespace detail

/// Perfect matching of A against B with every pair within eps, or absent.
/// Greedy nearest-neighbor first; optimal assignment fallback so that
/// near-degenerate configurations still match. Returns, for each index of A,
/// the matched index of B.
inline std::optional<std::vector<std::size_t>> multiset_match(const PointMultiset& A,
                                                              const PointMultiset& B,
                                                              double eps = kEps) {
  if (A.size() != B.size()) return std::nullopt;
  const std::size_t n = A.size();
  std::vector<std::size_t> result(n, 0);
  std::vector<char> used(n, 0);
  bool greedy_ok = true;
  for (std::size_t i = 0; i < n && greedy_ok; ++i) {
    double best = eps;
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = chordal_distance(A[i], B[j]);
      if (d <= best) {
        best = d;
        pick = j;
      }
    }
    if (!pick) {
      greedy_ok = false;
      break;
    }
    used[*pick] = 1;
    result[i] = *pick;
  }
  if (greedy_ok) return result;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (chordal_distance(A[i], B[j]) <= eps) adj[i].push_back(j);
  std::vector<int> match_b(n, -1);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> visited(n, 0);
    if (detail::try_augment(i, adj, match_b, visited)) ++matched;
  }
  if (matched != n) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) result[static_cast<std::size_t>(match_b[j])] = j;
  return result;
}

inline bool multisets_equal(const PointMultiset& A, const PointMultiset& B, double eps = kEps) {
  return multiset_match(A, B, eps).has_value();
}

/// Deterministic representative: the member with lexicographically smallest
/// rounded (re, im); infinity sorts last.
inline SpherePoint orbit_representative(const PointMultiset& orbit) {
  if (orbit.empty()) throw std::domain_error("representative of empty orbit");
  const SpherePoint* best = &orbit.front();
  auto bk = best->sort_key();
  for (const auto& p : orbit) {
    const auto k = p.sort_key();
    if (k < bk) {
      bk = k;
      best = &p;
    }
  }
  return *best;
}

}  // namespace sphereforms
