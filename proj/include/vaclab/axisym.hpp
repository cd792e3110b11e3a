#pragma once

// Residual checkers for the axisymmetric ansatz. Derivatives in the
// (s, z) chart are the primary path; Cartesian finite differences serve
// as oracles in the tests. Operations requiring 1/s demand s > 0 and do
// not regularize the axis.

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "vaclab/chart.hpp"
#include "vaclab/constants.hpp"
#include "vaclab/fields.hpp"
#include "vaclab/func1.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/solutions.hpp"

namespace vaclab {

struct AxiPoint {
  double s = 0.0;
  double z = 0.0;
  double t = 0.0;

  AxiPoint(double s_, double z_, double t_ = 0.0) : s(s_), z(z_), t(t_) {
    if (!(s >= 0.0)) throw std::invalid_argument("AxiPoint: s must be nonnegative");
  }
};

/// One-variable slots f, g, h plus the chart field u they compose with.
struct FGHU {
  Func1 f;
  Func1 g;
  Func1 h;
  ChartField2 u;
};

/// Residual of the nonlinear compatibility relation between f, g, h, u:
///   (s/c^2) Lap f(u) f'(u) - [4 s g'(u) d_ss g(u) + g'(u) d_zz g(u) + h(u) h'(u)]
/// where Lap is the 3-space laplacian expressed through the chart and
/// d_ss, d_zz act on the composite g(u(s, z)).
[[nodiscard]] inline double nonlinear_ansatz_residual(const FGHU& q, const AxiPoint& p,
                                                      const PhysicalConstants& constants) {
  const double s = p.s, z = p.z;
  const double u = q.u.value(s, z);
  const double us = q.u.ds(s, z), uz = q.u.dz(s, z);
  const double uss = q.u.dss(s, z), uzz = q.u.dzz(s, z);
  const double fp = q.f.d1(u), fpp = q.f.d2(u);
  const double gp = q.g.d1(u), gpp = q.g.d2(u);
  const double hv = q.h.value(u), hp = q.h.d1(u);

  const double lap_fu = 4.0 * (fp * us + s * (fpp * us * us + fp * uss)) +
                        (fpp * uz * uz + fp * uzz);
  const double dss_gu = gpp * us * us + gp * uss;
  const double dzz_gu = gpp * uz * uz + gp * uzz;
  const double lhs = s / (constants.c * constants.c) * lap_fu * fp;
  const double rhs = 4.0 * s * gp * dss_gu + gp * dzz_gu + hv * hp;
  return lhs - rhs;
}

/// Residual of the linear reduction (f, g, h all linear in their slot):
///   (a0^2/c^2) s Lap u - [4 a^2 s d_ss u + a^2 d_zz u + b^2 u]
[[nodiscard]] inline double linear_ansatz_residual(const ChartField2& u, double a0, double a,
                                                   double b, const AxiPoint& p,
                                                   const PhysicalConstants& constants) {
  const double s = p.s, z = p.z;
  const double lap = chart_laplacian3(u, s, z);
  return a0 * a0 / (constants.c * constants.c) * s * lap -
         (4.0 * a * a * s * u.dss(s, z) + a * a * u.dzz(s, z) + b * b * u.value(s, z));
}

/// s Lap u_k - 4 k^2 u_k for the power family; zero in exact arithmetic.
[[nodiscard]] inline double uk_identity_residual(double k, const AxiPoint& p) {
  if (!(p.s > 0.0)) throw std::domain_error("uk_identity_residual: requires s > 0");
  const ChartField2 u = chart2_uk(k);
  return p.s * chart_laplacian3(u, p.s, p.z) - 4.0 * k * k * u.value(p.s, p.z);
}

/// Stationary fields generated by a chart field u and constants (a0, a, b):
///   E = a0 grad u,
///   B = (a x/s d_z u + b y/s u,  a y/s d_z u - b x/s u,  -2 a d_s u).
/// The z-axis joins the singular set whenever a 1/s component is present.
[[nodiscard]] inline EMSolution ansatz_solution(const ChartField2& u, double a0, double a,
                                                double b, const PhysicalConstants& constants) {
  EMSolution sol;
  sol.constants = constants;
  sol.label = "ansatz_solution";
  if (a != 0.0 || b != 0.0) sol.singular.axes.push_back({0.0, 0.0, 1e-6});

  sol.E = from_gradient(to_cartesian(scale(u, a0)));

  sol.B.value = [u, a, b](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double uv = u.value(s, p.z), uz = u.dz(s, p.z), us = u.ds(s, p.z);
    const double P = uz / s, Q = uv / s;
    return Vec3{a * p.x * P + b * p.y * Q, a * p.y * P - b * p.x * Q, -2.0 * a * us};
  };
  sol.B.jacobian = [u, a, b](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double x = p.x, y = p.y;
    const double uv = u.value(s, p.z), uz = u.dz(s, p.z), us = u.ds(s, p.z);
    const double uss = u.dss(s, p.z), usz = u.dsz(s, p.z), uzz = u.dzz(s, p.z);
    const double P = uz / s, Q = uv / s;
    const double Ps = usz / s - uz / (s * s);
    const double Pz = uzz / s;
    const double Qs = us / s - uv / (s * s);
    const double Qz = uz / s;
    const double qcross = 2.0 * b * x * y * Qs;  // shared so div B cancels exactly
    Mat3 j;
    j(0, 0) = a * P + 2.0 * a * x * x * Ps + qcross;
    j(0, 1) = 2.0 * a * x * y * Ps + b * Q + 2.0 * b * y * y * Qs;
    j(0, 2) = a * x * Pz + b * y * Qz;
    j(1, 0) = 2.0 * a * x * y * Ps - b * Q - 2.0 * b * x * x * Qs;
    j(1, 1) = a * P + 2.0 * a * y * y * Ps - qcross;
    j(1, 2) = a * y * Pz - b * x * Qz;
    j(2, 0) = -4.0 * a * x * uss;
    j(2, 1) = -4.0 * a * y * uss;
    j(2, 2) = -2.0 * a * usz;
    return j;
  };
  sol.B.time_derivative = [](const Point4&) { return Vec3{}; };
  return sol;
}

/// Residuals of the time-dependent two-potential system for
///   E = (d_x Psi, d_y Psi, d_z Psi + Phi_t), B = (-d_y Phi, d_x Phi, 0):
///   r1 = Phi_s [4 c^2 d_s(s Phi_s) - Phi_tt - Psi_zt] - Psi_s [Lap Psi + Phi_zt]
///   r2 = Phi_s [4 c^2 d_z(s Phi_s) + 4 s Psi_st] - (Phi_t + Psi_z) [Lap Psi + Phi_zt]
[[nodiscard]] inline std::array<double, 2> potential_pair_residual(
    const ChartField3& psi, const ChartField3& phi, const AxiPoint& p,
    const PhysicalConstants& constants) {
  const double s = p.s, z = p.z, t = p.t;
  const double c2 = constants.c * constants.c;
  const double phi_s = phi.ds(s, z, t), phi_ss = phi.dss(s, z, t);
  const double phi_t = phi.dt(s, z, t), phi_tt = phi.dtt(s, z, t);
  const double phi_sz = phi.dsz(s, z, t), phi_zt = phi.dzt(s, z, t);
  const double psi_s = psi.ds(s, z, t), psi_z = psi.dz(s, z, t);
  const double psi_ss = psi.dss(s, z, t), psi_zz = psi.dzz(s, z, t);
  const double psi_st = psi.dst(s, z, t), psi_zt = psi.dzt(s, z, t);

  const double lap_psi = 4.0 * (psi_s + s * psi_ss) + psi_zz;
  const double r1 = phi_s * (4.0 * c2 * (phi_s + s * phi_ss) - phi_tt - psi_zt) -
                    psi_s * (lap_psi + phi_zt);
  const double r2 = phi_s * (4.0 * c2 * s * phi_sz + 4.0 * s * psi_st) -
                    (phi_t + psi_z) * (lap_psi + phi_zt);
  return {r1, r2};
}

/// Stationary reduction with g = s Phi_s:
///   r1 = 4 c^2 g d_s g - s Lap Psi d_s Psi
///   r2 = 4 c^2 g d_z g - s Lap Psi d_z Psi
[[nodiscard]] inline std::array<double, 2> stationary_pair_residual(
    const ChartField2& psi, const ChartField2& g, const AxiPoint& p,
    const PhysicalConstants& constants) {
  const double s = p.s, z = p.z;
  const double c2 = constants.c * constants.c;
  const double lap = chart_laplacian3(psi, s, z);
  const double gv = g.value(s, z);
  const double r1 = 4.0 * c2 * gv * g.ds(s, z) - s * lap * psi.ds(s, z);
  const double r2 = 4.0 * c2 * gv * g.dz(s, z) - s * lap * psi.dz(s, z);
  return {r1, r2};
}

/// The canonical stationary pair: for a z-independent potential psi(s),
/// g = (1/c) s psi'(s) solves the stationary reduction identically.
[[nodiscard]] inline std::pair<ChartField2, ChartField2> canonical_stationary_pair(
    const Func1& psi, const PhysicalConstants& constants) {
  const double inv_c = 1.0 / constants.c;
  ChartField2 psi_cf = chart2_of_s(psi);
  ChartField2 g;
  g.value = [psi, inv_c](double s, double) { return inv_c * s * psi.d1(s); };
  g.ds = [psi, inv_c](double s, double) { return inv_c * (psi.d1(s) + s * psi.d2(s)); };
  g.dz = [](double, double) { return 0.0; };
  g.dss = [](double, double) -> double {
    // would need psi'''; nothing that consumes this pair uses d_ss g
    throw std::logic_error("canonical_stationary_pair: d_ss g not available");
  };
  g.dsz = [](double, double) { return 0.0; };
  g.dzz = [](double, double) { return 0.0; };
  return {psi_cf, g};
}

/// Derivative view of a potential whose s-derivative is g / s. Only the
/// derivatives of Phi enter any residual, so the undetermined additive
/// constant is irrelevant and the value slot is left at zero.
[[nodiscard]] inline ChartField3 phi_from_g(const ChartField2& g) {
  ChartField3 phi;
  phi.value = [](double, double, double) { return 0.0; };
  phi.ds = [g](double s, double z, double) { return g.value(s, z) / s; };
  phi.dz = [](double, double, double) { return 0.0; };  // unused by the residuals
  phi.dt = [](double, double, double) { return 0.0; };
  phi.dss = [g](double s, double z, double) {
    return (g.ds(s, z) * s - g.value(s, z)) / (s * s);
  };
  phi.dzz = [](double, double, double) { return 0.0; };
  phi.dtt = [](double, double, double) { return 0.0; };
  phi.dsz = [g](double s, double z, double) { return g.dz(s, z) / s; };
  phi.dst = [](double, double, double) { return 0.0; };
  phi.dzt = [](double, double, double) { return 0.0; };
  return phi;
}

}  // namespace vaclab
