#pragma once

#include <cmath>
#include <stdexcept>

namespace vaclab {

/// Vacuum-medium constants. The triple must satisfy mu0 * eps0 * c^2 = 1;
/// the constructor rejects anything off by more than 1e-14 relative.
struct PhysicalConstants {
  double c;
  double eps0;
  double mu0;

  PhysicalConstants(double c_, double eps0_, double mu0_) : c(c_), eps0(eps0_), mu0(mu0_) {
    if (!(c > 0.0) || !(eps0 > 0.0) || !(mu0 > 0.0))
      throw std::invalid_argument("PhysicalConstants: c, eps0, mu0 must be positive");
    if (std::abs(mu0 * eps0 * c * c - 1.0) > 1e-14)
      throw std::invalid_argument("PhysicalConstants: mu0*eps0*c^2 must equal 1");
  }

  /// Normalized units c = eps0 = mu0 = 1. Default for all identity tests.
  static PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }

  /// SI values; eps0 is derived from mu0 and c so the unit relation holds exactly.
  static PhysicalConstants si() {
    const double c = 299792458.0;
    const double mu0 = 1.25663706212e-6;
    return {c, 1.0 / (mu0 * c * c), mu0};
  }
};

[[nodiscard]] inline bool same_constants(const PhysicalConstants& a, const PhysicalConstants& b) {
  return a.c == b.c && a.eps0 == b.eps0 && a.mu0 == b.mu0;
}

}  // namespace vaclab
