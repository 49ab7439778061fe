#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

inline SpherePoint conj_point(const SpherePoint& p) {
  return SpherePoint::from_pair(std::conj(p.num()), std::conj(p.den()));
}

/// Conformal automorphism z -> (az+b)/(cz+d) of the Riemann sphere.
/// Stored with determinant 1 and canonicalized sign: the first entry of
/// (a,b,c,d) with nonnegligible modulus has argument in (-pi/2, pi/2].
/// The sign rule is a storage convention only; equality always tests both
/// PSL(2,C) sign representatives, since the rule is unstable on the branch cut.
class MobiusMap {
 public:
  MobiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}

  static MobiusMap from_coefficients(Complex a, Complex b, Complex c, Complex d) {
    const Complex det = a * d - b * c;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (scale == 0.0 || std::abs(det) < 1e-14 * scale * scale)
      throw std::domain_error("mobius map: zero determinant");
    MobiusMap m;
    const Complex s = std::sqrt(det);
    m.a_ = a / s;
    m.b_ = b / s;
    m.c_ = c / s;
    m.d_ = d / s;
    m.canonicalize_sign();
    return m;
  }

  static MobiusMap identity() { return MobiusMap(); }

  /// Rotation z -> e^{2 pi i / n} z.
  static MobiusMap rotation(int n) {
    return from_coefficients(std::polar(1.0, 2.0 * kPi / n), 0.0, 0.0, 1.0);
  }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  SpherePoint apply(const SpherePoint& p) const {
    return SpherePoint::from_pair(a_ * p.num() + b_ * p.den(), c_ * p.num() + d_ * p.den());
  }

  SpherePoint apply(Complex z) const { return apply(SpherePoint::from_complex(z)); }

  MobiusMap inverse() const {
    MobiusMap m;
    m.a_ = d_;
    m.b_ = -b_;
    m.c_ = -c_;
    m.d_ = a_;
    m.canonicalize_sign();
    return m;
  }

  Complex trace_squared() const {
    const Complex t = a_ + d_;
    return t * t;
  }

  /// Derivative dT/dz at a finite non-pole point; with det 1 this is 1/(cz+d)^2.
  Complex derivative(Complex z) const {
    const Complex w = c_ * z + d_;
    return 1.0 / (w * w);
  }

 private:
  void canonicalize_sign() {
    const std::array<Complex, 4> e{a_, b_, c_, d_};
    for (const Complex& x : e) {
      if (std::abs(x) <= 1e-9) continue;
      const double ar = std::arg(x);
      if (!(ar > -kPi / 2 && ar <= kPi / 2)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
      }
      return;
    }
  }

  Complex a_, b_, c_, d_;
};

inline MobiusMap compose(const MobiusMap& T, const MobiusMap& S) {
  return MobiusMap::from_coefficients(T.a() * S.a() + T.b() * S.c(), T.a() * S.b() + T.b() * S.d(),
                                      T.c() * S.a() + T.d() * S.c(),
                                      T.c() * S.b() + T.d() * S.d());
}

/// Entrywise equality against both PSL(2,C) sign representatives.
inline bool maps_equal(const MobiusMap& T, const MobiusMap& S, double eps = kEps) {
  const double plus = std::max({std::abs(T.a() - S.a()), std::abs(T.b() - S.b()),
                                std::abs(T.c() - S.c()), std::abs(T.d() - S.d())});
  if (plus <= eps) return true;
  const double minus = std::max({std::abs(T.a() + S.a()), std::abs(T.b() + S.b()),
                                 std::abs(T.c() + S.c()), std::abs(T.d() + S.d())});
  return minus <= eps;
}

inline bool is_identity(const MobiusMap& T, double eps = kEps) {
  return maps_equal(T, MobiusMap::identity(), eps);
}

inline PointMultiset transport(const MobiusMap& T, const PointMultiset& s) {
  PointMultiset out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(T.apply(p));
  return out;
}

/// Smallest k <= cap with T^k = identity, or absent. Only maps with real
/// trace^2 in [0, 4] can have finite order; powers of anything else run away
/// from the identity (and degenerate numerically), so reject them up front.
inline std::optional<int> rotation_order(const MobiusMap& T, int cap = 100) {
  const Complex t2 = T.trace_squared();
  if (!(std::abs(t2.imag()) <= kTraceBandEps && t2.real() >= -kTraceBandEps &&
        t2.real() <= 4.0 + kTraceBandEps))
    return std::nullopt;
  MobiusMap power = T;
  for (int k = 1; k <= cap; ++k) {
    if (is_identity(power)) return k;
    power = compose(power, T);
  }
  return std::nullopt;
}

enum class MapTag { identity, elliptic, parabolic, loxodromic };

struct MapClass {
  MapTag tag = MapTag::identity;
  std::optional<int> order;  // finite order when detected within max_order
};

/// Trace classification with a tolerance band of width kTraceBandEps around
/// the parabolic boundary trace^2 = 4; loxodromic covers the hyperbolic case.
inline MapClass classify(const MobiusMap& T, int max_order = 100) {
  if (is_identity(T)) return {MapTag::identity, 1};
  const Complex t2 = T.trace_squared();
  if (std::abs(t2 - 4.0) <= kTraceBandEps) return {MapTag::parabolic, std::nullopt};
  if (std::abs(t2.imag()) <= kTraceBandEps && t2.real() >= 0.0 && t2.real() < 4.0)
    return {MapTag::elliptic, rotation_order(T, max_order)};
  return {MapTag::loxodromic, std::nullopt};
}

/// Roots of c z^2 + (d-a) z - b = 0 in projective coordinates: two points for
/// elliptic/loxodromic maps, one for parabolic.
inline std::vector<SpherePoint> fixed_points(const MobiusMap& T) {
  if (is_identity(T)) throw std::domain_error("every point fixed");
  const Complex a = T.a(), b = T.b(), c = T.c(), d = T.d();
  const Complex disc = T.trace_squared() - 4.0;  // equals (a-d)^2 + 4bc for det 1
  if (std::abs(c) <= 1e-12) {
    if (std::abs(a - d) <= 1e-12) return {SpherePoint::infinity()};  // translation
    return {SpherePoint::infinity(), SpherePoint::from_pair(b, d - a)};
  }
  if (std::abs(disc) <= kTraceBandEps)
    return {SpherePoint::from_pair(a - d, 2.0 * c)};
  const Complex s = std::sqrt(disc);
  // Take the larger-magnitude branch first to dodge cancellation, then use
  // the root product -b/c for the other.
  const Complex u = (std::abs((a - d) + s) >= std::abs((a - d) - s)) ? (a - d) + s : (a - d) - s;
  const SpherePoint z1 = SpherePoint::from_pair(u, 2.0 * c);
  const SpherePoint z2 = SpherePoint::from_pair(-2.0 * b, u);  // (-b/c)/(u/(2c))
  return {z1, z2};
}

namespace detail {
// Matrix sending (p1, p2, p3) to (0, 1, inf), entries from projective pairs.
inline std::array<Complex, 4> to_zero_one_inf(const SpherePoint& p1, const SpherePoint& p2,
                                              const SpherePoint& p3) {
  auto det2 = [](const SpherePoint& x, const SpherePoint& y) {
    return x.num() * y.den() - y.num() * x.den();
  };
  const Complex d23 = det2(p2, p3), d21 = det2(p2, p1);
  return {d23 * p1.den(), -d23 * p1.num(), d21 * p3.den(), -d21 * p3.num()};
}

inline void require_distinct(const std::array<SpherePoint, 3>& t, const char* which) {
  if (!pairwise_separated({t.begin(), t.end()}, kEps))
    throw std::domain_error(std::string("repeated point in ") + which + " triple");
}
}  // namespace detail

/// The unique Moebius map sending src[i] to dst[i]; infinity allowed anywhere.
inline MobiusMap from_three_pairs(const std::array<SpherePoint, 3>& src,
                                  const std::array<SpherePoint, 3>& dst) {
  detail::require_distinct(src, "source");
  detail::require_distinct(dst, "target");
  const auto A = detail::to_zero_one_inf(src[0], src[1], src[2]);
  const auto B = detail::to_zero_one_inf(dst[0], dst[1], dst[2]);
  // T = B^{-1} A with the unnormalized adjugate of B.
  return MobiusMap::from_coefficients(B[3] * A[0] - B[1] * A[2], B[3] * A[1] - B[1] * A[3],
                                      -B[2] * A[0] + B[0] * A[2], -B[2] * A[1] + B[0] * A[3]);
}

/// Anti-conformal automorphism z -> (a conj(z) + b)/(c conj(z) + d), stored as
/// the Moebius part applied after conjugation.
class AntiMobiusMap {
 public:
  AntiMobiusMap() = default;
  explicit AntiMobiusMap(const MobiusMap& m) : m_(m) {}

  const MobiusMap& mob() const { return m_; }

  SpherePoint apply(const SpherePoint& p) const { return m_.apply(conj_point(p)); }
  SpherePoint apply(Complex z) const { return apply(SpherePoint::from_complex(z)); }

 private:
  MobiusMap m_;
};

inline MobiusMap compose(const AntiMobiusMap& s1, const AntiMobiusMap& s2) {
  const MobiusMap conj_m2 = MobiusMap::from_coefficients(
      std::conj(s2.mob().a()), std::conj(s2.mob().b()), std::conj(s2.mob().c()),
      std::conj(s2.mob().d()));
  return compose(s1.mob(), conj_m2);
}

inline AntiMobiusMap compose(const MobiusMap& T, const AntiMobiusMap& s) {
  return AntiMobiusMap(compose(T, s.mob()));
}

inline AntiMobiusMap compose(const AntiMobiusMap& s, const MobiusMap& T) {
  const MobiusMap conj_t = MobiusMap::from_coefficients(std::conj(T.a()), std::conj(T.b()),
                                                        std::conj(T.c()), std::conj(T.d()));
  return AntiMobiusMap(compose(s.mob(), conj_t));
}

inline PointMultiset transport(const AntiMobiusMap& s, const PointMultiset& set) {
  PointMultiset out;
  out.reserve(set.size());
  for (const auto& p : set) out.push_back(s.apply(p));
  return out;
}

inline bool is_involution(const AntiMobiusMap& s, double eps = kEps) {
  return is_identity(compose(s, s), eps);
}

/// An anti-involution is a reflection (circle of fixed points) when
/// M conj(M) = +I; the -I case is the fixed-point-free antipodal map.
inline bool is_reflection(const AntiMobiusMap& s, double eps = kEps) {
  const MobiusMap& m = s.mob();
  const Complex ra = m.a() * std::conj(m.a()) + m.b() * std::conj(m.c());
  const Complex rb = m.a() * std::conj(m.b()) + m.b() * std::conj(m.d());
  const Complex rc = m.c() * std::conj(m.a()) + m.d() * std::conj(m.c());
  const Complex rd = m.c() * std::conj(m.b()) + m.d() * std::conj(m.d());
  return std::abs(ra - 1.0) <= eps && std::abs(rb) <= eps && std::abs(rc) <= eps &&
         std::abs(rd - 1.0) <= eps;
}

/// The anti-conformal map with s(src[i]) = dst[i]: conjugation composed with
/// the Moebius map determined on the conjugated sources.
inline AntiMobiusMap anti_from_three_pairs(const std::array<SpherePoint, 3>& src,
                                           const std::array<SpherePoint, 3>& dst) {
  const std::array<SpherePoint, 3> csrc{conj_point(src[0]), conj_point(src[1]),
                                        conj_point(src[2])};
  return AntiMobiusMap(from_three_pairs(csrc, dst));
}

/// Reflection across the circle through three points:
/// W maps (0,1,inf) to (p1,p2,p3), and the reflection is W . conj . W^{-1}.
inline AntiMobiusMap reflection_from_three_points(const SpherePoint& p1, const SpherePoint& p2,
                                                  const SpherePoint& p3) {
  detail::require_distinct({p1, p2, p3}, "circle");
  const MobiusMap W =
      from_three_pairs({SpherePoint(), SpherePoint::from_complex(1.0), SpherePoint::infinity()},
                       {p1, p2, p3});
  const MobiusMap conj_winv = MobiusMap::from_coefficients(
      std::conj(W.inverse().a()), std::conj(W.inverse().b()), std::conj(W.inverse().c()),
      std::conj(W.inverse().d()));
  return AntiMobiusMap(compose(W, conj_winv));
}

/// Three points on the fixed circle of a reflection. Solves M = W conj(W)^{-1}
/// via W = S + M conj(S) (any S keeping W invertible), so the fixed set is the
/// W-image of the real axis; the constructed points are verified fixed.
inline std::array<SpherePoint, 3> fixed_circle_points(const AntiMobiusMap& s) {
  if (!is_reflection(s)) throw std::domain_error("fixed circle of a non-reflection");
  const MobiusMap& m = s.mob();
  const std::array<std::array<Complex, 4>, 3> seeds{{{1.0, 0.0, 0.0, 1.0},
                                                     {1.0, 0.0, 0.0, -1.0},
                                                     {0.0, 1.0, 1.0, 0.0}}};
  for (const auto& S : seeds) {
    // W = S + M conj(S), entrywise.
    const Complex wa = S[0] + m.a() * std::conj(S[0]) + m.b() * std::conj(S[2]);
    const Complex wb = S[1] + m.a() * std::conj(S[1]) + m.b() * std::conj(S[3]);
    const Complex wc = S[2] + m.c() * std::conj(S[0]) + m.d() * std::conj(S[2]);
    const Complex wd = S[3] + m.c() * std::conj(S[1]) + m.d() * std::conj(S[3]);
    const double scale = std::max({std::abs(wa), std::abs(wb), std::abs(wc), std::abs(wd)});
    if (scale < 1e-9 || std::abs(wa * wd - wb * wc) < 1e-6 * scale * scale) continue;
    const MobiusMap W = MobiusMap::from_coefficients(wa, wb, wc, wd);
    const std::array<SpherePoint, 3> pts{W.apply(SpherePoint()),
                                         W.apply(SpherePoint::from_complex(1.0)),
                                         W.apply(SpherePoint::infinity())};
    bool ok = true;
    for (const auto& p : pts)
      if (!points_equal(s.apply(p), p, 1e-6)) ok = false;
    if (ok) return pts;
  }
  throw std::logic_error("fixed circle construction failed");
}

}  // namespace sphereforms
