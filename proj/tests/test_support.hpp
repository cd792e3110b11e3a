#pragma once

// Shared helpers for the unit suites: hand-built analytic fields with
// known derivatives, and the analytic-vs-finite-difference convergence
// fit used as a blanket consistency check on every constructed field.

#include <cmath>
#include <vector>

#include "vaclab/fd_oracle.hpp"
#include "vaclab/fields.hpp"
#include "vaclab/random.hpp"

namespace vtest {

using namespace vaclab;

// f(p) = x^2 + y^2
inline ScalarField field_x2y2() {
  ScalarField f;
  f.value = [](const Point4& p) { return p.x * p.x + p.y * p.y; };
  f.gradient = [](const Point4& p) { return Vec3{2.0 * p.x, 2.0 * p.y, 0.0}; };
  f.hessian = [](const Point4&) {
    Mat3 h;
    h(0, 0) = 2.0;
    h(1, 1) = 2.0;
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return f;
}

// f(p) = x^2 + y^2 + z^2
inline ScalarField field_r2() {
  ScalarField f;
  f.value = [](const Point4& p) { return p.x * p.x + p.y * p.y + p.z * p.z; };
  f.gradient = [](const Point4& p) { return Vec3{2.0 * p.x, 2.0 * p.y, 2.0 * p.z}; };
  f.hessian = [](const Point4&) {
    Mat3 h;
    h(0, 0) = h(1, 1) = h(2, 2) = 2.0;
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return f;
}

// f(p) = 1/r, harmonic away from the origin
inline ScalarField field_inv_r() {
  ScalarField f;
  f.value = [](const Point4& p) { return 1.0 / norm(p.spatial()); };
  f.gradient = [](const Point4& p) {
    const Vec3 x = p.spatial();
    const double r = norm(x);
    return (-1.0 / (r * r * r)) * x;
  };
  f.hessian = [](const Point4& p) {
    const Vec3 x = p.spatial();
    const double r = norm(x);
    const double r3 = r * r * r, r5 = r3 * r * r;
    const double c[3] = {x.x, x.y, x.z};
    Mat3 h;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        h(i, j) = 3.0 * c[i] * c[j] / r5 - (i == j ? 1.0 / r3 : 0.0);
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return f;
}

// f(p) = sin(ax + by + cz - wt)
inline ScalarField field_sine(double a, double b, double c, double w) {
  auto phase = [=](const Point4& p) { return a * p.x + b * p.y + c * p.z - w * p.t; };
  ScalarField f;
  f.value = [=](const Point4& p) { return std::sin(phase(p)); };
  f.gradient = [=](const Point4& p) {
    const double cs = std::cos(phase(p));
    return Vec3{a * cs, b * cs, c * cs};
  };
  f.hessian = [=](const Point4& p) {
    const double sn = std::sin(phase(p));
    const double k[3] = {a, b, c};
    Mat3 h;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h(i, j) = -k[i] * k[j] * sn;
    return h;
  };
  f.time_derivative = [=](const Point4& p) { return -w * std::cos(phase(p)); };
  return f;
}

/// Fitted convergence order of the analytic-vs-FD discrepancy for a
/// scalar field at one point; central differences should show >= 1.9.
inline double scalar_fd_order(const ScalarField& f, const Point4& p,
                              const std::vector<double>& hs = {1e-2, 5e-3, 2.5e-3}) {
  std::vector<double> errs;
  for (double h : hs) {
    const FdScalar fd = fd_scalar(f, p, h);
    double e = norm_inf(f.gradient(p) - fd.gradient);
    e = std::max(e, std::abs(f.hessian(p).trace() - fd.laplacian));
    e = std::max(e, std::abs(f.time_derivative(p) - fd.time_derivative));
    errs.push_back(e);
  }
  return fit_order(hs, errs);
}

inline double vector_fd_order(const VectorField& f, const Point4& p,
                              const std::vector<double>& hs = {1e-2, 5e-3, 2.5e-3}) {
  std::vector<double> errs;
  for (double h : hs) {
    const FdVector fd = fd_vector(f, p, h);
    double e = max_abs(f.jacobian(p) + (-1.0) * fd.jacobian);
    e = std::max(e, norm_inf(f.time_derivative(p) - fd.time_derivative));
    errs.push_back(e);
  }
  return fit_order(hs, errs);
}

}  // namespace vtest
