#pragma once

// Central finite differences with O(h^2) leading error, used as an
// independent oracle for the analytic derivative evaluators. Never the
// primary derivative path anywhere in the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "vaclab/fields.hpp"
#include "vaclab/geometry.hpp"

namespace vaclab {

struct FdScalar {
  Vec3 gradient;
  double laplacian = 0.0;
  double time_derivative = 0.0;
  bool step_too_small = false;
};

struct FdVector {
  Mat3 jacobian;
  Vec3 time_derivative;
  bool step_too_small = false;
};

namespace detail {
inline Point4 shifted(Point4 p, int axis, double d) {
  switch (axis) {
    case 0: p.x += d; break;
    case 1: p.y += d; break;
    case 2: p.z += d; break;
    default: p.t += d; break;
  }
  return p;
}

inline bool step_flag(const Point4& p, double h) {
  const double scale = std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(p.z), std::abs(p.t)});
  return h < 1e3 * std::numeric_limits<double>::epsilon() * scale;
}
}  // namespace detail

[[nodiscard]] inline FdScalar fd_scalar(const ScalarField& f, const Point4& p, double h) {
  FdScalar r;
  r.step_too_small = detail::step_flag(p, h);
  const double f0 = f.value(p);
  double lap = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const double fp = f.value(detail::shifted(p, axis, h));
    const double fm = f.value(detail::shifted(p, axis, -h));
    set_component(r.gradient, axis, (fp - fm) / (2.0 * h));
    lap += (fp - 2.0 * f0 + fm) / (h * h);
  }
  r.laplacian = lap;
  r.time_derivative =
      (f.value(detail::shifted(p, 3, h)) - f.value(detail::shifted(p, 3, -h))) / (2.0 * h);
  return r;
}

[[nodiscard]] inline FdVector fd_vector(const VectorField& f, const Point4& p, double h) {
  FdVector r;
  r.step_too_small = detail::step_flag(p, h);
  for (int axis = 0; axis < 3; ++axis) {
    const Vec3 fp = f.value(detail::shifted(p, axis, h));
    const Vec3 fm = f.value(detail::shifted(p, axis, -h));
    const Vec3 d = (fp - fm) / (2.0 * h);
    r.jacobian(0, axis) = d.x;
    r.jacobian(1, axis) = d.y;
    r.jacobian(2, axis) = d.z;
  }
  r.time_derivative = (f.value(detail::shifted(p, 3, h)) - f.value(detail::shifted(p, 3, -h))) /
                      (2.0 * h);
  return r;
}

// One-dimensional central differences for plain callables; handy when
// cross-checking chart and one-variable derivatives in tests.
[[nodiscard]] inline double fd_d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

[[nodiscard]] inline double fd_d2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

/// Least-squares slope of log(err) against log(h). Pairs with err below
/// 1e-300 are dropped; returns NaN when fewer than two usable pairs
/// remain (e.g. the discrepancy is exactly zero at every step).
[[nodiscard]] inline double fit_order(const std::vector<double>& hs,
                                      const std::vector<double>& errs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < hs.size() && i < errs.size(); ++i) {
    if (!(errs[i] > 1e-300)) continue;
    const double x = std::log(hs[i]);
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  const double nn = static_cast<double>(n);
  return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

}  // namespace vaclab
