#pragma once

// Seeded random generation with a pinned uniform mapping, so identical
// seeds give identical draws across standard-library implementations.

#include <cstdint>
#include <random>

#include "vaclab/geometry.hpp"

namespace vaclab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  [[nodiscard]] double unit() {  // uniform in [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  [[nodiscard]] double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  [[nodiscard]] Vec3 box(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  /// Random direction times a speed drawn uniformly from [0, vmax].
  [[nodiscard]] Vec3 velocity(double vmax) {
    for (;;) {
      const Vec3 w = box(-1.0, 1.0);
      const double n = norm(w);
      if (n > 1e-3 && n <= 1.0) return uniform(0.0, vmax) / n * w;
    }
  }

  [[nodiscard]] std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vaclab
