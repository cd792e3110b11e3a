#pragma once

// Box quadrature of charge, energy and momentum. Cell sums are reduced
// pairwise in a fixed order, so results are bitwise reproducible and do
// not depend on how the work might be partitioned.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "vaclab/fields.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/solutions.hpp"

namespace vaclab {

enum class Quadrature { Midpoint, Simpson };

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t cells = 0;
};

struct ConservedReport {
  double total_charge = 0.0;
  double total_energy = 0.0;
  Vec3 momentum;
  double dispersion_gap = 0.0;  // total_energy - c * |momentum|
  std::size_t cells = 0;
  double error_estimate = 0.0;
};

namespace detail {

inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return v.empty() ? 0.0 : pairwise_sum(v, 0, v.size());
}

template <typename F>
double midpoint_pass(F&& f, const GridSpec& grid, int nx, int ny, int nz, double* max_abs) {
  const double hx = (grid.upper.x - grid.lower.x) / nx;
  const double hy = (grid.upper.y - grid.lower.y) / ny;
  const double hz = (grid.upper.z - grid.lower.z) / nz;
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(nx) * ny * nz);
  double m = 0.0;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        const Point4 p{grid.lower.x + (i + 0.5) * hx, grid.lower.y + (j + 0.5) * hy,
                       grid.lower.z + (k + 0.5) * hz, grid.time};
        const double v = f(p);
        m = std::max(m, std::abs(v));
        vals.push_back(v);
      }
  if (max_abs) *max_abs = m;
  return pairwise_sum(vals) * hx * hy * hz;
}

template <typename F>
double simpson_pass(F&& f, const GridSpec& grid, int nx, int ny, int nz) {
  // composite Simpson; per-axis node count 2n+1
  auto wt = [](int i, int n) { return i == 0 || i == 2 * n ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0); };
  const double hx = (grid.upper.x - grid.lower.x) / (2 * nx);
  const double hy = (grid.upper.y - grid.lower.y) / (2 * ny);
  const double hz = (grid.upper.z - grid.lower.z) / (2 * nz);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(2 * nx + 1) * (2 * ny + 1) * (2 * nz + 1));
  for (int i = 0; i <= 2 * nx; ++i)
    for (int j = 0; j <= 2 * ny; ++j)
      for (int k = 0; k <= 2 * nz; ++k) {
        const Point4 p{grid.lower.x + i * hx, grid.lower.y + j * hy, grid.lower.z + k * hz,
                       grid.time};
        vals.push_back(wt(i, nx) * wt(j, ny) * wt(k, nz) * f(p));
      }
  return pairwise_sum(vals) * hx * hy * hz / 27.0;
}

template <typename F>
void check_support_contained(F&& f, const GridSpec& grid, double interior_scale) {
  // Sample all six faces; non-negligible boundary values mean the box
  // does not contain the integrand's support.
  const double tol = 1e-12 * std::max(1.0, interior_scale);
  const int n = 17;
  double worst = 0.0;
  for (int face = 0; face < 6; ++face) {
    const int fixed_axis = face / 2;
    const bool high = face % 2 == 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double coord[3];
        const double fi = static_cast<double>(i) / (n - 1);
        const double fj = static_cast<double>(j) / (n - 1);
        int idx = 0;
        for (int axis = 0; axis < 3; ++axis) {
          const double lo = component(grid.lower, axis), hi = component(grid.upper, axis);
          if (axis == fixed_axis)
            coord[axis] = high ? hi : lo;
          else
            coord[axis] = lo + (hi - lo) * (idx++ == 0 ? fi : fj);
        }
        worst = std::max(worst, std::abs(f(Point4{coord[0], coord[1], coord[2], grid.time})));
      }
  }
  if (worst > tol)
    throw std::domain_error("integrate_box: integrand support not contained in the box");
}

}  // namespace detail

/// Composite quadrature of a pointwise function over the grid box. The
/// grid's points-per-axis counts are the cell counts. The error estimate
/// is a Richardson comparison against a half-resolution pass.
template <typename F>
[[nodiscard]] IntegralResult integrate_box(F&& f, const GridSpec& grid,
                                           Quadrature method = Quadrature::Midpoint,
                                           bool require_contained_support = true) {
  const int nx = grid.points[0], ny = grid.points[1], nz = grid.points[2];
  IntegralResult out;
  out.cells = static_cast<std::size_t>(nx) * ny * nz;
  double interior_scale = 0.0;
  double fine = 0.0;
  if (method == Quadrature::Midpoint) {
    fine = detail::midpoint_pass(f, grid, nx, ny, nz, &interior_scale);
  } else {
    fine = detail::simpson_pass(f, grid, nx, ny, nz);
    detail::midpoint_pass(f, grid, nx, ny, nz, &interior_scale);  // scale for the support check
  }
  if (require_contained_support) detail::check_support_contained(f, grid, interior_scale);
  const int cx = std::max(3, nx / 2), cy = std::max(3, ny / 2), cz = std::max(3, nz / 2);
  const double coarse = method == Quadrature::Midpoint
                            ? detail::midpoint_pass(f, grid, cx, cy, cz, nullptr)
                            : detail::simpson_pass(f, grid, cx, cy, cz);
  out.value = fine;
  out.error_estimate = std::abs(fine - coarse) / 3.0;
  return out;
}

/// Integral of the derived charge density rho = eps0 div E.
[[nodiscard]] inline IntegralResult total_charge(const EMSolution& sol, const GridSpec& grid,
                                                 Quadrature method = Quadrature::Midpoint) {
  return integrate_box(
      [&sol](const Point4& p) { return sol.constants.eps0 * sol.E.jacobian(p).trace(); }, grid,
      method);
}

/// Energy density of the field pair.
[[nodiscard]] inline double energy_density(const EMSolution& sol, const Point4& p) {
  const Vec3 e = sol.E.value(p), b = sol.B.value(p);
  return 0.5 * sol.constants.eps0 * dot(e, e) + 0.5 * dot(b, b) / sol.constants.mu0;
}

/// Momentum density eps0 E x B.
[[nodiscard]] inline Vec3 momentum_density(const EMSolution& sol, const Point4& p) {
  return sol.constants.eps0 * cross(sol.E.value(p), sol.B.value(p));
}

/// Total charge, energy and momentum over the box, plus the dispersion
/// gap total_energy - c |momentum|. Pass require_contained_support=false
/// to integrate fields that fill the box (the totals then refer to the
/// box, not to all of space).
[[nodiscard]] inline ConservedReport energy_momentum(const EMSolution& sol, const GridSpec& grid,
                                                     Quadrature method = Quadrature::Midpoint,
                                                     bool require_contained_support = true) {
  ConservedReport rep;
  const auto w = [&](const Point4& p) { return energy_density(sol, p); };
  const IntegralResult energy = integrate_box(w, grid, method, require_contained_support);
  double perr = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const IntegralResult pi = integrate_box(
        [&, axis](const Point4& p) { return component(momentum_density(sol, p), axis); }, grid,
        method, require_contained_support);
    set_component(rep.momentum, axis, pi.value);
    perr = std::max(perr, pi.error_estimate);
  }
  const IntegralResult q = total_charge(sol, grid, method);
  rep.total_charge = q.value;
  rep.total_energy = energy.value;
  rep.dispersion_gap = rep.total_energy - sol.constants.c * norm(rep.momentum);
  rep.cells = energy.cells;
  rep.error_estimate = std::max({energy.error_estimate, perr, q.error_estimate});
  return rep;
}

}  // namespace vaclab
