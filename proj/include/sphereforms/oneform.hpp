#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sphereforms/detail/rng.hpp"
#include "sphereforms/mobius.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

/// Probe points are rejected within this multiple of eps of any special point.
inline constexpr double kProbeGuardFactor = 1e3;

/// Roots of a polynomial given by ascending coefficients: companion-matrix
/// eigenvalues with two Newton polish steps per root. Coefficients whose
/// modulus is below 1e-13 of the largest are treated as zero when locating
/// the leading term.
inline std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  double maxc = 0.0;
  for (const Complex& c : coeffs) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0) throw std::domain_error("roots of the zero polynomial");
  int degree = -1;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (std::abs(coeffs[i]) > 1e-13 * maxc) {
      degree = i;
      break;
    }
  }
  if (degree < 0) throw std::domain_error("roots of the zero polynomial");
  if (degree == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  const Complex lead = coeffs[static_cast<std::size_t>(degree)];
  for (int i = 0; i < degree; ++i) {
    companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    if (i + 1 < degree) companion(i + 1, i) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");

  auto horner = [&](Complex z, int top) {
    Complex p = 0.0;
    for (int i = top; i >= 0; --i) p = p * z + coeffs[static_cast<std::size_t>(i)];
    return p;
  };
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  for (int r = 0; r < degree; ++r) {
    Complex z = solver.eigenvalues()(r);
    for (int step = 0; step < 2; ++step) {
      // p'(z) by Horner on the derivative coefficients.
      Complex dp = 0.0;
      for (int i = degree; i >= 1; --i)
        dp = dp * z + static_cast<double>(i) * coeffs[static_cast<std::size_t>(i)];
      if (std::abs(dp) < 1e-300) break;
      z -= horner(z, degree) / dp;
    }
    roots.push_back(z);
  }
  return roots;
}

/// Ascending coefficients of lead * prod (z - r).
inline std::vector<Complex> expand_roots(const std::vector<Complex>& roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    c.push_back(c.back());
    for (std::size_t i = c.size() - 2; i >= 1; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return c;
}

struct Residue {
  SpherePoint at;
  Complex value;
};

/// eta = lambda prod(z - q_j) / prod(z - p_i) dz with simple zeros q_j and
/// simple poles p_i, either list possibly containing infinity.
/// Invariants: |poles| - |zeros| = 2, the sets are disjoint at eps, |poles| >= 2.
class RationalOneForm {
 public:
  RationalOneForm(Complex lambda, PointMultiset zeros, PointMultiset poles, double eps = kEps)
      : lambda_(lambda), zeros_(std::move(zeros)), poles_(std::move(poles)) {
    if (!(std::abs(lambda_) > 0.0) || !std::isfinite(std::abs(lambda_)))
      throw std::domain_error("form: lambda must be nonzero and finite");
    if (poles_.size() != zeros_.size() + 2)
      throw std::domain_error("form: pole count must exceed zero count by 2");
    if (poles_.size() < 2) throw std::domain_error("form: needs at least two poles");
    if (!pairwise_separated(zeros_, eps)) throw std::domain_error("non-simple root");
    if (!pairwise_separated(poles_, eps)) throw std::domain_error("non-simple root");
    for (const auto& q : zeros_)
      for (const auto& p : poles_)
        if (points_equal(q, p, eps)) throw std::domain_error("form: zeros and poles intersect");
    for (const auto& q : zeros_) {
      if (q.is_infinity())
        infinity_zero_ = true;
      else
        finite_zeros_.push_back(q.value());
    }
    for (const auto& p : poles_) {
      if (p.is_infinity())
        infinity_pole_ = true;
      else
        finite_poles_.push_back(p.value());
    }
  }

  Complex lambda() const { return lambda_; }
  const PointMultiset& zeros() const { return zeros_; }
  const PointMultiset& poles() const { return poles_; }
  const std::vector<Complex>& finite_zeros() const { return finite_zeros_; }
  const std::vector<Complex>& finite_poles() const { return finite_poles_; }
  bool has_infinity_zero() const { return infinity_zero_; }
  bool has_infinity_pole() const { return infinity_pole_; }

  /// The coefficient function f with eta = f dz, as the product over finite
  /// zeros/poles only; the degree deficit encodes the behavior at infinity.
  Complex evaluate(Complex z, double eps = kEps) const {
    const SpherePoint zp = SpherePoint::from_complex(z);
    for (const auto& p : poles_)
      if (chordal_distance(zp, p) <= eps) throw std::domain_error("evaluation at pole");
    return evaluate_unchecked(z);
  }

  Complex evaluate_unchecked(Complex z) const {
    Complex num = lambda_, den = 1.0;
    for (const Complex& q : finite_zeros_) num *= z - q;
    for (const Complex& p : finite_poles_) den *= z - p;
    return num / den;
  }

  /// f'(q) at the i-th finite simple zero q: the product rule leaves one term.
  Complex derivative_at_finite_zero(std::size_t i) const {
    const Complex q = finite_zeros_.at(i);
    Complex num = lambda_, den = 1.0;
    for (std::size_t j = 0; j < finite_zeros_.size(); ++j)
      if (j != i) num *= q - finite_zeros_[j];
    for (const Complex& p : finite_poles_) den *= q - p;
    return num / den;
  }

  RationalOneForm scaled(Complex c) const { return {lambda_ * c, zeros_, poles_}; }

 private:
  Complex lambda_;
  PointMultiset zeros_, poles_;
  std::vector<Complex> finite_zeros_, finite_poles_;
  bool infinity_zero_ = false, infinity_pole_ = false;
};

/// Ingests printed polynomial forms: roots of numer become zeros, roots of
/// denom become poles, lambda is the leading-coefficient ratio, and infinity
/// joins poles or zeros per the degree deficit so that |poles| - |zeros| = 2.
inline RationalOneForm from_rational_coefficients(const std::vector<Complex>& numer,
                                                  const std::vector<Complex>& denom,
                                                  double eps = kEps) {
  const std::vector<Complex> zero_values = polynomial_roots(numer);
  const std::vector<Complex> pole_values = polynomial_roots(denom);
  for (const Complex& q : zero_values)
    for (const Complex& p : pole_values)
      if (chordal_distance(SpherePoint::from_complex(q), SpherePoint::from_complex(p)) <= eps)
        throw std::domain_error("non-reduced fraction");

  const int deficit = static_cast<int>(pole_values.size()) - static_cast<int>(zero_values.size());
  PointMultiset zeros, poles;
  for (const Complex& q : zero_values) zeros.push_back(SpherePoint::from_complex(q));
  for (const Complex& p : pole_values) poles.push_back(SpherePoint::from_complex(p));
  if (deficit == 1)
    poles.push_back(SpherePoint::infinity());
  else if (deficit == 3)
    zeros.push_back(SpherePoint::infinity());
  else if (deficit != 2)
    throw std::domain_error("non-simple root");  // multiple zero or pole at infinity

  double max_n = 0.0, max_d = 0.0;
  for (const Complex& c : numer) max_n = std::max(max_n, std::abs(c));
  for (const Complex& c : denom) max_d = std::max(max_d, std::abs(c));
  auto lead = [](const std::vector<Complex>& c, double maxc) {
    for (std::size_t i = c.size(); i-- > 0;)
      if (std::abs(c[i]) > 1e-13 * maxc) return c[i];
    throw std::domain_error("roots of the zero polynomial");
  };
  const Complex lambda = lead(numer, max_n) / lead(denom, max_d);
  return {lambda, std::move(zeros), std::move(poles), eps};
}

/// Ascending {numer, denom} coefficient lists reproducing the form.
inline std::pair<std::vector<Complex>, std::vector<Complex>> to_rational_coefficients(
    const RationalOneForm& f) {
  return {expand_roots(f.finite_zeros(), f.lambda()), expand_roots(f.finite_poles(), 1.0)};
}

/// Deterministic regular probe points: drawn from a fixed stream, rejected
/// within kProbeGuardFactor * eps (chordal) of any point to avoid.
inline std::vector<Complex> regular_probes(const std::vector<const PointMultiset*>& avoid,
                                           int count, double eps = kEps,
                                           std::uint64_t seed = 0x9d2c5680u) {
  detail::Rng rng(seed);
  std::vector<Complex> out;
  const double guard = kProbeGuardFactor * eps;
  for (int tries = 0; tries < 100000 && static_cast<int>(out.size()) < count; ++tries) {
    const Complex z = rng.in_disk(2.0);
    const SpherePoint zp = SpherePoint::from_complex(z);
    bool ok = true;
    for (const PointMultiset* s : avoid)
      for (const auto& p : *s)
        if (chordal_distance(zp, p) <= guard) ok = false;
    if (ok) out.push_back(z);
  }
  if (static_cast<int>(out.size()) < count)
    throw std::logic_error("could not draw regular probe points");
  return out;
}

/// Transport along a Moebius map: multisets map through T, lambda is fixed by
/// one probe of the identity (T_* eta)(w) = f(T^{-1} w) (T^{-1})'(w) and
/// cross-checked at two more probes.
inline RationalOneForm pushforward(const MobiusMap& T, const RationalOneForm& f,
                                   double eps = kEps) {
  PointMultiset new_zeros = transport(T, f.zeros());
  PointMultiset new_poles = transport(T, f.poles());
  RationalOneForm candidate(1.0, new_zeros, new_poles, eps);
  const MobiusMap S = T.inverse();

  const auto probes = regular_probes(
      {&f.zeros(), &f.poles(), &new_zeros, &new_poles}, 8, eps);
  std::optional<Complex> lambda;
  int confirmations = 0;
  for (const Complex& w : probes) {
    const SpherePoint swp = S.apply(w);
    if (swp.is_infinity()) continue;
    const Complex sw = swp.value();
    if (std::abs(sw) > 1e8) continue;
    bool near_special = false;
    for (const auto& p : f.poles())
      if (chordal_distance(swp, p) <= kProbeGuardFactor * eps) near_special = true;
    if (near_special) continue;
    const Complex value = f.evaluate_unchecked(sw) * S.derivative(w);
    const Complex base = candidate.evaluate_unchecked(w);
    const Complex here = value / base;
    if (!lambda) {
      lambda = here;
    } else {
      if (std::abs(here - *lambda) > 1e-6 * std::abs(*lambda))
        throw std::logic_error("pushforward: probe consistency failure");
      ++confirmations;
    }
    if (confirmations >= 2) break;
  }
  if (!lambda || confirmations < 2)
    throw std::logic_error("pushforward: could not place probe points");
  return {*lambda, std::move(new_zeros), std::move(new_poles), eps};
}

/// Equality as forms: matching zero/pole multisets and agreement of the
/// coefficient function at three regular probes, relative to eps.
inline bool form_equal(const RationalOneForm& f, const RationalOneForm& g, double eps = kEps) {
  if (!multisets_equal(f.zeros(), g.zeros(), eps)) return false;
  if (!multisets_equal(f.poles(), g.poles(), eps)) return false;
  const auto probes = regular_probes({&f.zeros(), &f.poles(), &g.zeros(), &g.poles()}, 3, eps);
  for (const Complex& w : probes) {
    const Complex a = f.evaluate_unchecked(w), b = g.evaluate_unchecked(w);
    if (std::abs(a - b) > eps * std::max(std::abs(a), std::abs(b))) return false;
  }
  return true;
}

/// Residues at every pole, in the stored pole order. Finite poles use the
/// simple-pole product formula; the residue at infinity is the negated finite
/// sum, making the residue theorem exact by construction.
inline std::vector<Residue> residues(const RationalOneForm& f) {
  std::vector<Residue> out;
  out.reserve(f.poles().size());
  Complex finite_sum = 0.0;
  std::optional<std::size_t> infinity_slot;
  std::size_t finite_index = 0;
  for (const auto& pole : f.poles()) {
    if (pole.is_infinity()) {
      infinity_slot = out.size();
      out.push_back({pole, 0.0});
      continue;
    }
    const Complex p = pole.value();
    Complex num = f.lambda(), den = 1.0;
    for (const Complex& q : f.finite_zeros()) num *= p - q;
    for (std::size_t j = 0; j < f.finite_poles().size(); ++j)
      if (j != finite_index) den *= p - f.finite_poles()[j];
    ++finite_index;
    const Complex r = num / den;
    finite_sum += r;
    out.push_back({pole, r});
  }
  if (infinity_slot) out[*infinity_slot].value = -finite_sum;
  return out;
}

inline Complex residue_at(const RationalOneForm& f, const SpherePoint& p, double eps = kEps) {
  for (const auto& r : residues(f))
    if (points_equal(r.at, p, eps)) return r.value;
  throw std::domain_error("residue requested at a non-pole");
}

}  // namespace sphereforms
