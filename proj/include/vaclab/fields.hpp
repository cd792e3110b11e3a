#pragma once

// Analytic fields over spacetime. A field carries its own derivative
// evaluators, supplied in closed form by whoever constructs it; finite
// differences (fd_oracle.hpp) exist only as an independent cross-check.
// All evaluators are pure, so fields are safe to share across threads.

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "vaclab/constants.hpp"
#include "vaclab/geometry.hpp"

namespace vaclab {

struct ScalarField {
  std::function<double(const Point4&)> value;
  std::function<Vec3(const Point4&)> gradient;
  std::function<Mat3(const Point4&)> hessian;
  std::function<double(const Point4&)> time_derivative;
};

struct VectorField {
  std::function<Vec3(const Point4&)> value;
  std::function<Mat3(const Point4&)> jacobian;  // (i,j) = d F_i / d x_j
  std::function<Vec3(const Point4&)> time_derivative;
};

[[nodiscard]] inline ScalarField scalar_constant(double v) {
  return {[v](const Point4&) { return v; },
          [](const Point4&) { return Vec3{}; },
          [](const Point4&) { return Mat3{}; },
          [](const Point4&) { return 0.0; }};
}

[[nodiscard]] inline VectorField vector_constant(Vec3 v) {
  return {[v](const Point4&) { return v; },
          [](const Point4&) { return Mat3{}; },
          [](const Point4&) { return Vec3{}; }};
}

/// Gradient field of a scalar. The jacobian is the scalar's hessian.
/// Only valid as written for time-independent sources: the time
/// derivative of the gradient is not recoverable from a ScalarField,
/// so it must be supplied explicitly when nonzero.
[[nodiscard]] inline VectorField from_gradient(
    const ScalarField& u, std::function<Vec3(const Point4&)> dt = {}) {
  VectorField f;
  f.value = u.gradient;
  f.jacobian = u.hessian;
  f.time_derivative = dt ? std::move(dt) : [](const Point4&) { return Vec3{}; };
  return f;
}

/// Curl of a vector potential given by three time-independent scalar
/// components. Values come from the gradients, the jacobian from the
/// hessians.
[[nodiscard]] inline VectorField from_potential_curl(const ScalarField& ax,
                                                     const ScalarField& ay,
                                                     const ScalarField& az) {
  VectorField f;
  f.value = [ax, ay, az](const Point4& p) {
    const Vec3 gx = ax.gradient(p), gy = ay.gradient(p), gz = az.gradient(p);
    return Vec3{gz.y - gy.z, gx.z - gz.x, gy.x - gx.y};
  };
  f.jacobian = [ax, ay, az](const Point4& p) {
    const Mat3 hx = ax.hessian(p), hy = ay.hessian(p), hz = az.hessian(p);
    Mat3 j;
    for (int col = 0; col < 3; ++col) {
      j(0, col) = hz(1, col) - hy(2, col);
      j(1, col) = hx(2, col) - hz(0, col);
      j(2, col) = hy(0, col) - hx(1, col);
    }
    return j;
  };
  f.time_derivative = [](const Point4&) { return Vec3{}; };
  return f;
}

// Differential operators, straight from the analytic evaluators.

[[nodiscard]] inline Vec3 grad(const ScalarField& f, const Point4& p) { return f.gradient(p); }

[[nodiscard]] inline double div(const VectorField& f, const Point4& p) {
  return f.jacobian(p).trace();
}

[[nodiscard]] inline Vec3 curl(const VectorField& f, const Point4& p) {
  const Mat3 j = f.jacobian(p);
  return {j(2, 1) - j(1, 2), j(0, 2) - j(2, 0), j(1, 0) - j(0, 1)};
}

[[nodiscard]] inline double laplacian(const ScalarField& f, const Point4& p) {
  return f.hessian(p).trace();
}

/// Rectangular sampling grid: node (i,j,k) spans the closed box between
/// the two corners, at a single evaluation time.
struct GridSpec {
  Vec3 lower;
  Vec3 upper;
  std::array<int, 3> points{33, 33, 33};
  double time = 0.0;

  GridSpec(Vec3 lo, Vec3 hi, std::array<int, 3> n, double t = 0.0)
      : lower(lo), upper(hi), points(n), time(t) {
    if (!(upper.x > lower.x && upper.y > lower.y && upper.z > lower.z))
      throw std::invalid_argument("GridSpec: upper must exceed lower componentwise");
    for (int k : points)
      if (k < 3) throw std::invalid_argument("GridSpec: need at least 3 points per axis");
  }

  [[nodiscard]] Point4 node(int i, int j, int k) const {
    const auto frac = [](int idx, int n) { return static_cast<double>(idx) / (n - 1); };
    return {lower.x + (upper.x - lower.x) * frac(i, points[0]),
            lower.y + (upper.y - lower.y) * frac(j, points[1]),
            lower.z + (upper.z - lower.z) * frac(k, points[2]), time};
  }

  template <typename F>
  void for_each_node(F&& fn) const {
    for (int i = 0; i < points[0]; ++i)
      for (int j = 0; j < points[1]; ++j)
        for (int k = 0; k < points[2]; ++k) fn(node(i, j, k));
  }

  [[nodiscard]] std::size_t node_count() const {
    return static_cast<std::size_t>(points[0]) * static_cast<std::size_t>(points[1]) *
           static_cast<std::size_t>(points[2]);
  }
};

}  // namespace vaclab
