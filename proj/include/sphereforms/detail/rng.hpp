#pragma once

#include <cmath>
#include <cstdint>

#include "sphereforms/sphere_point.hpp"

namespace sphereforms::detail {

/// Deterministic splitmix64 stream. Used instead of <random> distributions so
/// that seeded outputs are bit-identical across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform point in the closed disk of the given radius.
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(u01());
    const double phi = 2.0 * kPi * u01();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  /// Uniform point on the Riemann sphere (area measure).
  SpherePoint on_sphere() {
    const double w = 1.0 - 2.0 * u01();
    const double phi = 2.0 * kPi * u01();
    const double rho = std::sqrt(std::max(0.0, 1.0 - w * w));
    return SpherePoint::from_embed3({rho * std::cos(phi), rho * std::sin(phi), w});
  }

 private:
  std::uint64_t state_;
};

}  // namespace sphereforms::detail
