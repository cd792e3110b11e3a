#pragma once

// The axisymmetric chart (s, z) with s = x^2 + y^2. Fields on the chart
// carry closed-form partials; to_cartesian lifts them back to 3-space
// where the full 3-space laplacian reads 4 d_s(s d_s) + d_zz.

#include <cmath>
#include <functional>
#include <utility>

#include "vaclab/fields.hpp"
#include "vaclab/func1.hpp"
#include "vaclab/geometry.hpp"

namespace vaclab {

/// Field u(s, z) with partials up to second order.
struct ChartField2 {
  std::function<double(double, double)> value, ds, dz, dss, dsz, dzz;
};

/// Field u(s, z, t) with all first and second partials that the
/// time-dependent potential-pair residuals consume.
struct ChartField3 {
  std::function<double(double, double, double)> value, ds, dz, dt, dss, dzz, dtt, dsz, dst, dzt;
};

[[nodiscard]] inline ChartField2 chart2_separable(const Func1& f, const Func1& g) {
  return {[=](double s, double z) { return f.value(s) * g.value(z); },
          [=](double s, double z) { return f.d1(s) * g.value(z); },
          [=](double s, double z) { return f.value(s) * g.d1(z); },
          [=](double s, double z) { return f.d2(s) * g.value(z); },
          [=](double s, double z) { return f.d1(s) * g.d1(z); },
          [=](double s, double z) { return f.value(s) * g.d2(z); }};
}

[[nodiscard]] inline ChartField2 chart2_of_s(const Func1& f) {
  return chart2_separable(f, func1_constant(1.0));
}

[[nodiscard]] inline ChartField2 operator+(const ChartField2& a, const ChartField2& b) {
  return {[=](double s, double z) { return a.value(s, z) + b.value(s, z); },
          [=](double s, double z) { return a.ds(s, z) + b.ds(s, z); },
          [=](double s, double z) { return a.dz(s, z) + b.dz(s, z); },
          [=](double s, double z) { return a.dss(s, z) + b.dss(s, z); },
          [=](double s, double z) { return a.dsz(s, z) + b.dsz(s, z); },
          [=](double s, double z) { return a.dzz(s, z) + b.dzz(s, z); }};
}

[[nodiscard]] inline ChartField2 scale(const ChartField2& a, double c) {
  return {[=](double s, double z) { return c * a.value(s, z); },
          [=](double s, double z) { return c * a.ds(s, z); },
          [=](double s, double z) { return c * a.dz(s, z); },
          [=](double s, double z) { return c * a.dss(s, z); },
          [=](double s, double z) { return c * a.dsz(s, z); },
          [=](double s, double z) { return c * a.dzz(s, z); }};
}

[[nodiscard]] inline ChartField2 translate_z(const ChartField2& a, double dz0) {
  return {[=](double s, double z) { return a.value(s, z + dz0); },
          [=](double s, double z) { return a.ds(s, z + dz0); },
          [=](double s, double z) { return a.dz(s, z + dz0); },
          [=](double s, double z) { return a.dss(s, z + dz0); },
          [=](double s, double z) { return a.dsz(s, z + dz0); },
          [=](double s, double z) { return a.dzz(s, z + dz0); }};
}

/// 3-space laplacian of a chart field at (s, z): 4 d_s(s d_s u) + d_zz u.
[[nodiscard]] inline double chart_laplacian3(const ChartField2& u, double s, double z) {
  return 4.0 * (u.ds(s, z) + s * u.dss(s, z)) + u.dzz(s, z);
}

namespace detail {
struct UkDerivs {
  double u, ds, dz, dss, dsz, dzz;
};

// u = s^k (s + z^2)^m with m = -2k - 1/2; zero coefficients short-circuit
// the pow calls so k in {0, 1} does not hit 0 * inf at small s.
inline UkDerivs uk_derivs(double k, double s, double z) {
  const double w = s + z * z;
  const double m = -2.0 * k - 0.5;
  auto term = [&](double c, double se, double we) {
    return c == 0.0 ? 0.0 : c * std::pow(s, se) * std::pow(w, we);
  };
  UkDerivs d{};
  d.u = term(1.0, k, m);
  d.ds = term(k, k - 1.0, m) + term(m, k, m - 1.0);
  d.dz = 2.0 * z * term(m, k, m - 1.0);
  d.dss = term(k * (k - 1.0), k - 2.0, m) + term(2.0 * k * m, k - 1.0, m - 1.0) +
          term(m * (m - 1.0), k, m - 2.0);
  d.dsz = 2.0 * z * (term(k * m, k - 1.0, m - 1.0) + term(m * (m - 1.0), k, m - 2.0));
  d.dzz = 2.0 * term(m, k, m - 1.0) + 4.0 * z * z * term(m * (m - 1.0), k, m - 2.0);
  return d;
}
}  // namespace detail

/// The power family u = s^k (s + z^2)^(-2k - 1/2) on the chart, with all
/// partials in closed form. Requires s > 0 (fractional powers of s).
[[nodiscard]] inline ChartField2 chart2_uk(double k) {
  return {[k](double s, double z) { return detail::uk_derivs(k, s, z).u; },
          [k](double s, double z) { return detail::uk_derivs(k, s, z).ds; },
          [k](double s, double z) { return detail::uk_derivs(k, s, z).dz; },
          [k](double s, double z) { return detail::uk_derivs(k, s, z).dss; },
          [k](double s, double z) { return detail::uk_derivs(k, s, z).dsz; },
          [k](double s, double z) { return detail::uk_derivs(k, s, z).dzz; }};
}

/// Lift a chart field to a time-independent Cartesian scalar field.
[[nodiscard]] inline ScalarField to_cartesian(const ChartField2& u) {
  ScalarField f;
  f.value = [u](const Point4& p) { return u.value(p.x * p.x + p.y * p.y, p.z); };
  f.gradient = [u](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double us = u.ds(s, p.z);
    return Vec3{2.0 * p.x * us, 2.0 * p.y * us, u.dz(s, p.z)};
  };
  f.hessian = [u](const Point4& p) {
    const double s = p.x * p.x + p.y * p.y;
    const double us = u.ds(s, p.z), uss = u.dss(s, p.z), usz = u.dsz(s, p.z);
    Mat3 h;
    h(0, 0) = 2.0 * us + 4.0 * p.x * p.x * uss;
    h(1, 1) = 2.0 * us + 4.0 * p.y * p.y * uss;
    h(2, 2) = u.dzz(s, p.z);
    h(0, 1) = h(1, 0) = 4.0 * p.x * p.y * uss;
    h(0, 2) = h(2, 0) = 2.0 * p.x * usz;
    h(1, 2) = h(2, 1) = 2.0 * p.y * usz;
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return f;
}

[[nodiscard]] inline ChartField3 chart3_separable(const Func1& f, const Func1& g, const Func1& h) {
  auto mk = [=](auto fa, auto ga, auto ha) {
    return [=](double s, double z, double t) { return fa(s) * ga(z) * ha(t); };
  };
  ChartField3 c;
  c.value = mk(f.value, g.value, h.value);
  c.ds = mk(f.d1, g.value, h.value);
  c.dz = mk(f.value, g.d1, h.value);
  c.dt = mk(f.value, g.value, h.d1);
  c.dss = mk(f.d2, g.value, h.value);
  c.dzz = mk(f.value, g.d2, h.value);
  c.dtt = mk(f.value, g.value, h.d2);
  c.dsz = mk(f.d1, g.d1, h.value);
  c.dst = mk(f.d1, g.value, h.d1);
  c.dzt = mk(f.value, g.d1, h.d1);
  return c;
}

[[nodiscard]] inline ChartField3 chart3_from2(const ChartField2& a) {
  auto lift = [](const std::function<double(double, double)>& f) {
    return [f](double s, double z, double) { return f(s, z); };
  };
  auto zero = [](double, double, double) { return 0.0; };
  ChartField3 c;
  c.value = lift(a.value);
  c.ds = lift(a.ds);
  c.dz = lift(a.dz);
  c.dt = zero;
  c.dss = lift(a.dss);
  c.dzz = lift(a.dzz);
  c.dtt = zero;
  c.dsz = lift(a.dsz);
  c.dst = zero;
  c.dzt = zero;
  return c;
}

[[nodiscard]] inline ChartField3 operator+(const ChartField3& a, const ChartField3& b) {
  auto add = [](const std::function<double(double, double, double)>& f,
                const std::function<double(double, double, double)>& g) {
    return [f, g](double s, double z, double t) { return f(s, z, t) + g(s, z, t); };
  };
  ChartField3 c;
  c.value = add(a.value, b.value);
  c.ds = add(a.ds, b.ds);
  c.dz = add(a.dz, b.dz);
  c.dt = add(a.dt, b.dt);
  c.dss = add(a.dss, b.dss);
  c.dzz = add(a.dzz, b.dzz);
  c.dtt = add(a.dtt, b.dtt);
  c.dsz = add(a.dsz, b.dsz);
  c.dst = add(a.dst, b.dst);
  c.dzt = add(a.dzt, b.dzt);
  return c;
}

}  // namespace vaclab
