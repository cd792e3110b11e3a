#pragma once

// Compactly supported smooth profiles. Values and the first two
// derivatives are all closed-form; supports are genuine (identically
// zero outside, not merely small).

#include <cmath>
#include <stdexcept>

#include "vaclab/fields.hpp"
#include "vaclab/geometry.hpp"

namespace vaclab {

/// A time-independent scalar profile on 3-space together with its
/// support ball. Everything downstream (traveling waves, quadrature
/// boxes) keys off the support.
struct Profile {
  ScalarField a0;
  Vec3 center;
  double support_radius = 0.0;
};

namespace detail {

// w(q) = exp(1 - 1/(1-q)) on q in [0,1); w' = -w/(1-q)^2,
// w'' = w (2q-1)/(1-q)^4. Underflow of the exponential kills the
// rational factors well before they overflow.
struct BumpEval {
  double w = 0.0, w1 = 0.0, w2 = 0.0;
};

inline BumpEval bump_radial(double q) {
  BumpEval r;
  if (q >= 1.0 - 1e-8) return r;
  const double om = 1.0 - q;
  r.w = std::exp(1.0 - 1.0 / om);
  r.w1 = -r.w / (om * om);
  r.w2 = r.w * (2.0 * q - 1.0) / (om * om * om * om);
  return r;
}

// Two-plateau transition: sigma(0)=1, sigma(1)=0, C-infinity, built from
// phi(t) = exp(-1/t). phi and friends are treated as exactly zero for
// t <= 0.01; the discarded tail is below exp(-100) ~ 4e-44.
struct SigmaEval {
  double s = 0.0, s1 = 0.0, s2 = 0.0;
};

inline void phi_eval(double t, double& f, double& f1, double& f2) {
  if (t <= 0.01) {
    f = f1 = f2 = 0.0;
    return;
  }
  f = std::exp(-1.0 / t);
  f1 = f / (t * t);
  f2 = f * (1.0 - 2.0 * t) / (t * t * t * t);
}

inline SigmaEval sigma_eval(double rho) {
  SigmaEval out;
  if (rho <= 0.0) {
    out.s = 1.0;
    return out;
  }
  if (rho >= 1.0) return out;
  double n, n1, n2, d, d1, d2;
  phi_eval(1.0 - rho, n, n1, n2);
  n1 = -n1;  // chain rule for phi(1 - rho)
  phi_eval(rho, d, d1, d2);
  const double sum = n + d;
  const double num1 = n1 * d - n * d1;
  out.s = n / sum;
  out.s1 = num1 / (sum * sum);
  out.s2 = ((n2 * d - n * d2) * sum - 2.0 * num1 * (n1 + d1)) / (sum * sum * sum);
  return out;
}

}  // namespace detail

/// Radial bump amplitude * exp(1 - 1/(1 - r^2/R^2)) inside the ball of
/// radius R about the center, identically zero outside.
[[nodiscard]] inline Profile mollifier(Vec3 center, double radius, double amplitude) {
  if (!(radius > 0.0)) throw std::invalid_argument("mollifier: radius must be positive");
  const double inv_r2 = 1.0 / (radius * radius);

  ScalarField f;
  f.value = [=](const Point4& p) {
    const Vec3 d = p.spatial() - center;
    return amplitude * detail::bump_radial(dot(d, d) * inv_r2).w;
  };
  f.gradient = [=](const Point4& p) {
    const Vec3 d = p.spatial() - center;
    const auto b = detail::bump_radial(dot(d, d) * inv_r2);
    return amplitude * b.w1 * 2.0 * inv_r2 * d;
  };
  f.hessian = [=](const Point4& p) {
    const Vec3 d = p.spatial() - center;
    const auto b = detail::bump_radial(dot(d, d) * inv_r2);
    const double c2 = amplitude * b.w2 * 4.0 * inv_r2 * inv_r2;
    const double c1 = amplitude * b.w1 * 2.0 * inv_r2;
    const double dd[3] = {d.x, d.y, d.z};
    Mat3 h;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) h(i, j) = h(j, i) = c2 * dd[i] * dd[j] + (i == j ? c1 : 0.0);
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return {f, center, radius};
}

/// (A y sin wx + B z cos wx) * chi(r) with chi a smooth radial cutoff
/// equal to 1 inside inner_radius and 0 outside outer_radius. Inside the
/// inner ball the profile is exactly the trigonometric expression.
[[nodiscard]] inline Profile polarized_profile(double amp_a, double amp_b, double omega,
                                               double inner_radius, double outer_radius) {
  if (!(0.0 < inner_radius && inner_radius < outer_radius))
    throw std::invalid_argument("polarized_profile: need 0 < inner_radius < outer_radius");
  if (!(omega > 0.0)) throw std::invalid_argument("polarized_profile: omega must be positive");
  const double width = outer_radius - inner_radius;

  // chi and its first two radial derivatives
  auto chi_eval = [=](double r, double& chi, double& chi1, double& chi2) {
    if (r <= inner_radius) {
      chi = 1.0;
      chi1 = chi2 = 0.0;
      return;
    }
    if (r >= outer_radius) {
      chi = chi1 = chi2 = 0.0;
      return;
    }
    const auto s = detail::sigma_eval((r - inner_radius) / width);
    chi = s.s;
    chi1 = s.s1 / width;
    chi2 = s.s2 / (width * width);
  };

  ScalarField f;
  f.value = [=](const Point4& p) {
    const double r = norm(p.spatial());
    double chi, c1, c2;
    chi_eval(r, chi, c1, c2);
    if (chi == 0.0) return 0.0;
    return (amp_a * p.y * std::sin(omega * p.x) + amp_b * p.z * std::cos(omega * p.x)) * chi;
  };
  f.gradient = [=](const Point4& p) {
    const Vec3 x = p.spatial();
    const double r = norm(x);
    double chi, c1, c2;
    chi_eval(r, chi, c1, c2);
    if (chi == 0.0 && c1 == 0.0) return Vec3{};
    const double sn = std::sin(omega * p.x), cs = std::cos(omega * p.x);
    const double trig = amp_a * p.y * sn + amp_b * p.z * cs;
    const Vec3 gt{omega * (amp_a * p.y * cs - amp_b * p.z * sn), amp_a * sn, amp_b * cs};
    const Vec3 gc = (r > 0.0) ? (c1 / r) * x : Vec3{};
    return chi * gt + trig * gc;
  };
  f.hessian = [=](const Point4& p) {
    const Vec3 x = p.spatial();
    const double r = norm(x);
    double chi, c1, c2;
    chi_eval(r, chi, c1, c2);
    const double sn = std::sin(omega * p.x), cs = std::cos(omega * p.x);
    const double trig = amp_a * p.y * sn + amp_b * p.z * cs;
    const double gt[3] = {omega * (amp_a * p.y * cs - amp_b * p.z * sn), amp_a * sn, amp_b * cs};
    Mat3 ht;  // hessian of the trigonometric factor
    ht(0, 0) = -omega * omega * trig;
    ht(0, 1) = ht(1, 0) = omega * amp_a * cs;
    ht(0, 2) = ht(2, 0) = -omega * amp_b * sn;
    ht(1, 1) = ht(2, 2) = ht(1, 2) = ht(2, 1) = 0.0;
    Mat3 h;
    if (c1 == 0.0 && c2 == 0.0) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = chi * ht(i, j);
      return h;
    }
    const double xx[3] = {x.x, x.y, x.z};
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        const double rij = xx[i] * xx[j] / (r * r);
        const double hc = c2 * rij + c1 * ((i == j ? 1.0 : 0.0) - rij) / r;  // hessian of chi
        const double v = chi * ht(i, j) + gt[i] * (c1 * xx[j] / r) + (c1 * xx[i] / r) * gt[j] +
                         trig * hc;
        h(i, j) = h(j, i) = v;
      }
    }
    return h;
  };
  f.time_derivative = [](const Point4&) { return 0.0; };
  return {f, Vec3{}, outer_radius};
}

}  // namespace vaclab
