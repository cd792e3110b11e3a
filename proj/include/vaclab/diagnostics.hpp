#pragma once

// Derived vacuum-state characteristics and residual evaluation for the
// nonlinear system (Faraday + solenoidal B + force/power constraints)
// and for the classical linear system (adds div E = 0 and the
// source-free Ampere law).
//
// The charge and current lines are definitions, so rho and j are always
// derived from E and B; they never become independent inputs.

#include <cstddef>
#include <stdexcept>

#include "vaclab/fields.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/solutions.hpp"

namespace vaclab {

/// Pointwise derived state: rho = eps0 div E, j = (curl B - Edot/c^2)/mu0,
/// force density rho E + j x B, power density (E, j).
struct DerivedState {
  double rho = 0.0;
  Vec3 j;
  Vec3 force;
  double power = 0.0;
};

struct PointResidual {
  Vec3 faraday;           // Bdot + curl E
  double div_b = 0.0;
  Vec3 force;             // rho E + [j, B]   (raw units)
  double power = 0.0;     // (E, j)           (raw units)
  double force_normalized = 0.0;
  double power_normalized = 0.0;
  // linear-system extras
  double div_e = 0.0;
  Vec3 ampere_vacuum;     // Edot - c^2 curl B
};

struct ResidualSup {
  double faraday = 0.0;
  double div_b = 0.0;
  double force = 0.0;
  double power = 0.0;
  double force_normalized = 0.0;
  double power_normalized = 0.0;
  double div_e = 0.0;
  double ampere_vacuum = 0.0;
};

struct ResidualReport {
  int system = 1;
  ResidualSup sup;
  std::size_t samples = 0;
  std::size_t skipped = 0;
};

[[nodiscard]] inline DerivedState derived_state(const EMSolution& sol, const Point4& p) {
  if (sol.singular.contains(p))
    throw std::domain_error("derived_state: point inside declared singular set");
  DerivedState d;
  const Vec3 e = sol.E.value(p);
  const Vec3 b = sol.B.value(p);
  d.rho = sol.constants.eps0 * div(sol.E, p);
  const Vec3 amp = curl(sol.B, p) - (1.0 / (sol.constants.c * sol.constants.c)) *
                                        sol.E.time_derivative(p);
  d.j = (1.0 / sol.constants.mu0) * amp;
  d.force = d.rho * e + cross(d.j, b);
  d.power = dot(e, d.j);
  return d;
}

namespace detail {
// Force is normalized by |rho||E| + |j||B|, power by |E||j|; where the
// normalizer is below 1e-8 the raw value is reported instead, so "zero"
// stays testable across field scales without dividing by noise.
inline void fill_normalized(PointResidual& r, const Vec3& e, const Vec3& b,
                            const DerivedState& d) {
  const double fscale = std::abs(d.rho) * norm(e) + norm(d.j) * norm(b);
  r.force_normalized = fscale > 1e-8 ? norm(r.force) / fscale : norm(r.force);
  const double pscale = norm(e) * norm(d.j);
  r.power_normalized = pscale > 1e-8 ? std::abs(r.power) / pscale : std::abs(r.power);
}
}  // namespace detail

[[nodiscard]] inline PointResidual residual_system1(const EMSolution& sol, const Point4& p) {
  if (sol.singular.contains(p))
    throw std::domain_error("residual_system1: point inside declared singular set");
  PointResidual r;
  r.faraday = sol.B.time_derivative(p) + curl(sol.E, p);
  r.div_b = div(sol.B, p);
  const DerivedState d = derived_state(sol, p);
  r.force = d.force;
  r.power = d.power;
  detail::fill_normalized(r, sol.E.value(p), sol.B.value(p), d);
  return r;
}

[[nodiscard]] inline PointResidual residual_system2(const EMSolution& sol, const Point4& p) {
  PointResidual r = residual_system1(sol, p);
  const double c2 = sol.constants.c * sol.constants.c;
  r.div_e = div(sol.E, p);
  r.ampere_vacuum = sol.E.time_derivative(p) - c2 * curl(sol.B, p);
  return r;
}

/// Componentwise sup norms over all grid nodes outside the singular set.
/// Nodes inside it are skipped and counted, never extrapolated.
[[nodiscard]] inline ResidualReport sup_residuals(const EMSolution& sol, const GridSpec& grid,
                                                  int system) {
  if (system != 1 && system != 2)
    throw std::invalid_argument("sup_residuals: system must be 1 or 2");
  ResidualReport rep;
  rep.system = system;
  grid.for_each_node([&](const Point4& p) {
    if (sol.singular.contains(p)) {
      ++rep.skipped;
      return;
    }
    ++rep.samples;
    const PointResidual r = system == 1 ? residual_system1(sol, p) : residual_system2(sol, p);
    rep.sup.faraday = std::max(rep.sup.faraday, norm_inf(r.faraday));
    rep.sup.div_b = std::max(rep.sup.div_b, std::abs(r.div_b));
    rep.sup.force = std::max(rep.sup.force, norm_inf(r.force));
    rep.sup.power = std::max(rep.sup.power, std::abs(r.power));
    rep.sup.force_normalized = std::max(rep.sup.force_normalized, r.force_normalized);
    rep.sup.power_normalized = std::max(rep.sup.power_normalized, r.power_normalized);
    if (system == 2) {
      rep.sup.div_e = std::max(rep.sup.div_e, std::abs(r.div_e));
      rep.sup.ampere_vacuum = std::max(rep.sup.ampere_vacuum, norm_inf(r.ampere_vacuum));
    }
  });
  if (rep.samples == 0) throw std::domain_error("sup_residuals: every grid node is singular");
  return rep;
}

}  // namespace vaclab
