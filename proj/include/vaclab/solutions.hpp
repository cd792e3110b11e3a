#pragma once

// Closed-form electromagnetic solution families. Every constructor
// returns an EMSolution whose E and B carry analytic jacobians and time
// derivatives, so the residual checks downstream measure the equations,
// not differentiation noise.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vaclab/chart.hpp"
#include "vaclab/constants.hpp"
#include "vaclab/fields.hpp"
#include "vaclab/func1.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/profiles.hpp"

namespace vaclab {

struct Ball {
  Vec3 center;
  double radius = 0.0;
};

/// Cylinder parallel to the z-axis through (x0, y0).
struct AxisCylinder {
  double x0 = 0.0;
  double y0 = 0.0;
  double radius = 0.0;
};

/// Points a solution declares as its own singularities. Evaluation there
/// is a caller error; grid sweeps skip and count them.
struct SingularSet {
  std::vector<Ball> balls;
  std::vector<AxisCylinder> axes;

  [[nodiscard]] bool contains(const Point4& p) const {
    for (const Ball& b : balls) {
      const Vec3 d = p.spatial() - b.center;
      if (dot(d, d) < b.radius * b.radius) return true;
    }
    for (const AxisCylinder& a : axes) {
      const double dx = p.x - a.x0, dy = p.y - a.y0;
      if (dx * dx + dy * dy < a.radius * a.radius) return true;
    }
    return false;
  }

  [[nodiscard]] bool empty() const { return balls.empty() && axes.empty(); }
};

[[nodiscard]] inline SingularSet merge(const SingularSet& a, const SingularSet& b) {
  SingularSet u = a;
  u.balls.insert(u.balls.end(), b.balls.begin(), b.balls.end());
  u.axes.insert(u.axes.end(), b.axes.begin(), b.axes.end());
  return u;
}

struct EMSolution {
  VectorField E;
  VectorField B;
  PhysicalConstants constants = PhysicalConstants::natural();
  SingularSet singular;
  std::string label;
};

enum class Axis { X, Y, Z };

namespace detail {
// Lab index of each intrinsic axis; cyclic, so handedness is preserved
// and the curl formulas carry over unchanged.
inline std::array<int, 3> axis_perm(Axis a) {
  switch (a) {
    case Axis::Y: return {1, 2, 0};
    case Axis::Z: return {2, 0, 1};
    default: return {0, 1, 2};
  }
}

inline double pcomp(const Point4& p, int i) { return i == 0 ? p.x : (i == 1 ? p.y : p.z); }
}  // namespace detail

/// The traveling solution built from a compactly supported profile:
/// with a = a0(x - ct, y, z),
///   E = c (0, da/dy, da/dz),  B = (0, -da/dz, da/dy),
/// rotated so the travel direction is the requested axis.
[[nodiscard]] inline EMSolution photon_wave(const Profile& profile,
                                            const PhysicalConstants& constants,
                                            Axis travel = Axis::X) {
  const auto perm = detail::axis_perm(travel);
  const double c = constants.c;
  const ScalarField a0 = profile.a0;

  // Intrinsic-frame evaluation point: first coordinate is shifted by -ct.
  auto intrinsic = [perm, c](const Point4& p) {
    return Point4{detail::pcomp(p, perm[0]) - c * p.t, detail::pcomp(p, perm[1]),
                  detail::pcomp(p, perm[2]), 0.0};
  };
  auto to_lab_vec = [perm](double v0, double v1, double v2) {
    Vec3 out;
    set_component(out, perm[0], v0);
    set_component(out, perm[1], v1);
    set_component(out, perm[2], v2);
    return out;
  };
  auto to_lab_mat = [perm](const Mat3& m) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out(perm[i], perm[j]) = m(i, j);
    return out;
  };

  EMSolution sol;
  sol.constants = constants;
  sol.label = "photon_wave";

  sol.E.value = [=](const Point4& p) {
    const Vec3 g = a0.gradient(intrinsic(p));
    return to_lab_vec(0.0, c * g.y, c * g.z);
  };
  sol.E.jacobian = [=](const Point4& p) {
    const Mat3 h = a0.hessian(intrinsic(p));
    Mat3 j;
    for (int col = 0; col < 3; ++col) {
      j(1, col) = c * h(1, col);
      j(2, col) = c * h(2, col);
    }
    return to_lab_mat(j);
  };
  sol.E.time_derivative = [=](const Point4& p) {
    const Mat3 h = a0.hessian(intrinsic(p));
    return to_lab_vec(0.0, -c * c * h(0, 1), -c * c * h(0, 2));
  };

  sol.B.value = [=](const Point4& p) {
    const Vec3 g = a0.gradient(intrinsic(p));
    return to_lab_vec(0.0, -g.z, g.y);
  };
  sol.B.jacobian = [=](const Point4& p) {
    const Mat3 h = a0.hessian(intrinsic(p));
    Mat3 j;
    for (int col = 0; col < 3; ++col) {
      j(1, col) = -h(2, col);
      j(2, col) = h(1, col);
    }
    return to_lab_mat(j);
  };
  sol.B.time_derivative = [=](const Point4& p) {
    const Mat3 h = a0.hessian(intrinsic(p));
    return to_lab_vec(0.0, c * h(0, 2), -c * h(0, 1));
  };
  return sol;
}

/// Stationary power-family solution E = grad u, B = (2k/(c s)) (y u, -x u, 0)
/// with u = s^k (s + z^2)^(-2k-1/2). Singular at the origin for every k
/// and on the z-axis whenever the 1/s prefactor is present (k != 0).
[[nodiscard]] inline EMSolution uk_solution(double k, const PhysicalConstants& constants,
                                            double exclusion_radius = 0.3) {
  EMSolution sol;
  sol.constants = constants;
  sol.label = "uk_solution";
  sol.singular.balls.push_back({Vec3{}, exclusion_radius});
  if (k != 0.0) sol.singular.axes.push_back({0.0, 0.0, 0.1});

  sol.E = from_gradient(to_cartesian(chart2_uk(k)));

  const double pref = 2.0 * k / constants.c;
  sol.B.value = [=](const Point4& p) {
    if (k == 0.0) return Vec3{};
    const double s = p.x * p.x + p.y * p.y;
    const auto d = detail::uk_derivs(k, s, p.z);
    const double q = d.u / s;
    return Vec3{pref * p.y * q, -pref * p.x * q, 0.0};
  };
  sol.B.jacobian = [=](const Point4& p) {
    Mat3 j;
    if (k == 0.0) return j;
    const double s = p.x * p.x + p.y * p.y;
    const auto d = detail::uk_derivs(k, s, p.z);
    const double q = d.u / s;
    const double qs = d.ds / s - d.u / (s * s);
    const double qz = d.dz / s;
    const double shared = pref * 2.0 * qs * p.x * p.y;  // makes div B cancel exactly
    j(0, 0) = shared;
    j(0, 1) = pref * (q + 2.0 * p.y * p.y * qs);
    j(0, 2) = pref * p.y * qz;
    j(1, 0) = -pref * (q + 2.0 * p.x * p.x * qs);
    j(1, 1) = -shared;
    j(1, 2) = -pref * p.x * qz;
    return j;
  };
  sol.B.time_derivative = [](const Point4&) { return Vec3{}; };
  return sol;
}

/// Stationary axisymmetric pair: for a one-variable potential psi(s),
///   E = grad psi(s) = (2x psi', 2y psi', 0),
///   B = (1/c) (-2y psi', 2x psi', 0).
/// psi must be smooth at s = 0; by construction it cannot depend on z or t.
[[nodiscard]] inline EMSolution stationary_pair_solution(const Func1& psi,
                                                         const PhysicalConstants& constants) {
  EMSolution sol;
  sol.constants = constants;
  sol.label = "stationary_pair";
  const double inv_c = 1.0 / constants.c;

  sol.E.value = [psi](const Point4& p) {
    const double d = psi.d1(p.x * p.x + p.y * p.y);
    return Vec3{2.0 * p.x * d, 2.0 * p.y * d, 0.0};
  };
  sol.E.jacobian = [psi](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double d1 = psi.d1(s), d2 = psi.d2(s);
    Mat3 j;
    j(0, 0) = 2.0 * d1 + 4.0 * p.x * p.x * d2;
    j(1, 1) = 2.0 * d1 + 4.0 * p.y * p.y * d2;
    j(0, 1) = j(1, 0) = 4.0 * p.x * p.y * d2;
    return j;
  };
  sol.E.time_derivative = [](const Point4&) { return Vec3{}; };

  sol.B.value = [psi, inv_c](const Point4& p) {
    const double d = inv_c * psi.d1(p.x * p.x + p.y * p.y);
    return Vec3{-2.0 * p.y * d, 2.0 * p.x * d, 0.0};
  };
  sol.B.jacobian = [psi, inv_c](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double d1 = inv_c * psi.d1(s), d2 = inv_c * psi.d2(s);
    const double shared = 4.0 * p.x * p.y * d2;
    Mat3 j;
    j(0, 0) = -shared;
    j(0, 1) = -2.0 * d1 - 4.0 * p.y * p.y * d2;
    j(1, 0) = 2.0 * d1 + 4.0 * p.x * p.x * d2;
    j(1, 1) = shared;
    return j;
  };
  sol.B.time_derivative = [](const Point4&) { return Vec3{}; };
  return sol;
}

/// Uniform stationary field E = (0, c h2, c h3), B = (h1, -h3, h2).
[[nodiscard]] inline EMSolution constant_background(double h1, double h2, double h3,
                                                    const PhysicalConstants& constants) {
  EMSolution sol;
  sol.constants = constants;
  sol.label = "constant_background";
  sol.E = vector_constant({0.0, constants.c * h2, constants.c * h3});
  sol.B = vector_constant({h1, -h3, h2});
  return sol;
}

/// Pointwise sum of two solutions over the same constants.
[[nodiscard]] inline EMSolution superpose(const EMSolution& s1, const EMSolution& s2) {
  if (!same_constants(s1.constants, s2.constants))
    throw std::invalid_argument("superpose: physical constants differ");
  auto add_field = [](const VectorField& a, const VectorField& b) {
    VectorField f;
    f.value = [=](const Point4& p) { return a.value(p) + b.value(p); };
    f.jacobian = [=](const Point4& p) { return a.jacobian(p) + b.jacobian(p); };
    f.time_derivative = [=](const Point4& p) {
      return a.time_derivative(p) + b.time_derivative(p);
    };
    return f;
  };
  EMSolution sol;
  sol.constants = s1.constants;
  sol.label = s1.label + "+" + s2.label;
  sol.singular = merge(s1.singular, s2.singular);
  sol.E = add_field(s1.E, s2.E);
  sol.B = add_field(s1.B, s2.B);
  return sol;
}

[[nodiscard]] inline EMSolution scale(const EMSolution& s, double alpha) {
  auto scale_field = [alpha](const VectorField& a) {
    VectorField f;
    f.value = [=](const Point4& p) { return alpha * a.value(p); };
    f.jacobian = [=](const Point4& p) { return alpha * a.jacobian(p); };
    f.time_derivative = [=](const Point4& p) { return alpha * a.time_derivative(p); };
    return f;
  };
  EMSolution out;
  out.constants = s.constants;
  out.label = s.label;
  out.singular = s.singular;
  out.E = scale_field(s.E);
  out.B = scale_field(s.B);
  return out;
}

/// Rigid spatial translation: fields of the result at p equal fields of
/// the source at p - offset.
[[nodiscard]] inline EMSolution translate(const EMSolution& s, Vec3 offset) {
  auto shift = [offset](const Point4& p) {
    return Point4{p.x - offset.x, p.y - offset.y, p.z - offset.z, p.t};
  };
  auto move_field = [shift](const VectorField& a) {
    VectorField f;
    f.value = [=](const Point4& p) { return a.value(shift(p)); };
    f.jacobian = [=](const Point4& p) { return a.jacobian(shift(p)); };
    f.time_derivative = [=](const Point4& p) { return a.time_derivative(shift(p)); };
    return f;
  };
  EMSolution out;
  out.constants = s.constants;
  out.label = s.label;
  out.singular = s.singular;
  for (Ball& b : out.singular.balls) b.center = b.center + offset;
  for (AxisCylinder& a : out.singular.axes) {
    a.x0 += offset.x;
    a.y0 += offset.y;
  }
  out.E = move_field(s.E);
  out.B = move_field(s.B);
  return out;
}

}  // namespace vaclab
