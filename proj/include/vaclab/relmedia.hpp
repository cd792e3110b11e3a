#pragma once

// Relativistic interaction of interpenetrating media: composite frames,
// action-reaction for force 4-densities, energy-exchange right-hand
// sides and energy-momentum-tensor source terms.
//
// Convention table (imaginary-time formalism rewritten over the reals):
//   imaginary-time form        real representation here
//   x_k = (x, y, z, ict)       Point4 (x, y, z, t)
//   a_4 = i * a_t              FourVec{spatial, temporal = a_t}
//   a_k b_k                    minkowski(a, b) = a.spatial . b.spatial - a_t b_t
//   V_k = (gamma v, ic gamma)  FourVec{gamma * v, c * gamma}
//   f_k = {f, (i/c) f . v}     FourVec{f, (f . v) / c}
// The rewrite is exact: an i-factor only ever meets another i-factor, so
// no complex arithmetic is needed anywhere.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "vaclab/constants.hpp"
#include "vaclab/geometry.hpp"

namespace vaclab {

/// Real representation of a 4-vector with imaginary fourth component.
struct FourVec {
  Vec3 spatial;
  double temporal = 0.0;
};

[[nodiscard]] inline FourVec operator+(const FourVec& a, const FourVec& b) {
  return {a.spatial + b.spatial, a.temporal + b.temporal};
}
[[nodiscard]] inline FourVec operator-(const FourVec& a, const FourVec& b) {
  return {a.spatial - b.spatial, a.temporal - b.temporal};
}
[[nodiscard]] inline FourVec operator-(const FourVec& a) { return {-a.spatial, -a.temporal}; }
[[nodiscard]] inline FourVec operator*(double s, const FourVec& a) {
  return {s * a.spatial, s * a.temporal};
}

/// Indefinite inner product a.spatial . b.spatial - a_t b_t.
[[nodiscard]] inline double minkowski(const FourVec& a, const FourVec& b) {
  return dot(a.spatial, b.spatial) - a.temporal * b.temporal;
}

[[nodiscard]] inline double max_abs(const FourVec& a) {
  return std::max(norm_inf(a.spatial), std::abs(a.temporal));
}

/// A medium sampled at one spacetime point: its 3-velocity and the
/// 3-force density it exerts on its partner medium.
struct MediumSample {
  Vec3 v;
  Vec3 f3;
};

namespace detail {
inline void require_subluminal(Vec3 v, double c, const char* who) {
  if (!(norm(v) < c)) throw std::domain_error(std::string(who) + ": |v| must be below c");
}
}  // namespace detail

[[nodiscard]] inline double gamma(Vec3 v, double c) {
  detail::require_subluminal(v, c, "gamma");
  return 1.0 / std::sqrt(1.0 - dot(v, v) / (c * c));
}

/// 4-velocity (gamma v, c gamma); its Minkowski norm is exactly -c^2.
[[nodiscard]] inline FourVec four_velocity(Vec3 v, double c) {
  const double g = gamma(v, c);
  return {g * v, c * g};
}

/// Pure boost by velocity w. Takes a particle moving with w to rest;
/// preserves the indefinite inner product.
[[nodiscard]] inline FourVec boost(const FourVec& a, Vec3 w, double c) {
  detail::require_subluminal(w, c, "boost");
  const double speed = norm(w);
  if (speed == 0.0) return a;
  const Vec3 n = w / speed;
  const double beta = speed / c;
  const double g = 1.0 / std::sqrt(1.0 - beta * beta);
  const double a_par = dot(a.spatial, n);
  const Vec3 a_perp = a.spatial - a_par * n;
  const double b_par = g * (a_par - beta * a.temporal);
  const double b_t = g * (a.temporal - beta * a_par);
  return {a_perp + b_par * n, b_t};
}

/// 3-velocity observed from the frame moving with boost_v.
[[nodiscard]] inline Vec3 velocity_in_frame(Vec3 v, Vec3 boost_v, double c) {
  const FourVec u = boost(four_velocity(v, c), boost_v, c);
  return (c / u.temporal) * u.spatial;
}

/// The frame in which two media move with equal and opposite velocities.
struct CompositeFrame {
  Vec3 v_ring;
  FourVec V_ring;
  double gamma_ring = 1.0;
};

/// Composite velocity v = (V^M + V^Phi)_spatial / (gamma^M + gamma^Phi)
/// and the closed-form composite gamma
///   (gamma^M + gamma^Phi) (2 + 2 g^M g^Phi - 2 g^M g^Phi v^M . v^Phi / c^2)^(-1/2).
[[nodiscard]] inline CompositeFrame composite_frame(Vec3 v_m, Vec3 v_phi, double c) {
  const double gm = gamma(v_m, c);
  const double gp = gamma(v_phi, c);
  CompositeFrame f;
  f.v_ring = (gm * v_m + gp * v_phi) / (gm + gp);
  f.gamma_ring = (gm + gp) / std::sqrt(2.0 + 2.0 * gm * gp - 2.0 * gm * gp * dot(v_m, v_phi) /
                                                                  (c * c));
  f.V_ring = {f.gamma_ring * f.v_ring, c * f.gamma_ring};
  return f;
}

/// 4-force density in the own-velocity version: {f, (f . v_own)/c}.
[[nodiscard]] inline FourVec force4_f(const MediumSample& sample, double c) {
  detail::require_subluminal(sample.v, c, "force4_f");
  return {sample.f3, dot(sample.f3, sample.v) / c};
}

/// 4-force density in the other-velocity version: {g, (g . v_other)/c}.
[[nodiscard]] inline FourVec force4_g(Vec3 g3, Vec3 v_other, double c) {
  detail::require_subluminal(v_other, c, "force4_g");
  return {g3, dot(g3, v_other) / c};
}

/// Closed-form counter-force: f^Phi = -f^M - (2/c^2) <f^M, V> V with V
/// the composite 4-velocity. The same shape serves both force versions.
[[nodiscard]] inline FourVec reaction_closed(const FourVec& f_m, const CompositeFrame& frame,
                                             double c) {
  const double proj = minkowski(f_m, frame.V_ring);
  return -f_m - (2.0 / (c * c) * proj) * frame.V_ring;
}

/// Brute-force counter-force: boost into the composite frame, flip the
/// spatial components, keep the temporal one, boost back. This is the
/// independent oracle for reaction_closed.
[[nodiscard]] inline FourVec reaction_oracle(Vec3 f_m3, Vec3 v_m, Vec3 v_phi, double c) {
  const CompositeFrame frame = composite_frame(v_m, v_phi, c);
  const FourVec f_m = force4_f({v_m, f_m3}, c);
  const FourVec in_frame = boost(f_m, frame.v_ring, c);
  const FourVec mirrored{-in_frame.spatial, in_frame.temporal};
  return boost(mirrored, -frame.v_ring, c);
}

/// Energy-exchange split controls; each pair must sum to one.
struct ExchangeParams {
  double k_m, k_phi, kappa_m, kappa_phi;

  ExchangeParams(double km, double kphi, double kam, double kaphi)
      : k_m(km), k_phi(kphi), kappa_m(kam), kappa_phi(kaphi) {
    auto check_pair = [](double a, double b, const char* name) {
      if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw std::invalid_argument(std::string("ExchangeParams: ") + name + " outside [0,1]");
      if (std::abs(a + b - 1.0) > 1e-14)
        throw std::invalid_argument(std::string("ExchangeParams: ") + name + " must sum to 1");
    };
    check_pair(k_m, k_phi, "k");
    check_pair(kappa_m, kappa_phi, "kappa");
  }

  static ExchangeParams symmetric() { return {0.5, 0.5, 0.5, 0.5}; }
  static ExchangeParams from_primary(double km, double kam) {
    return {km, 1.0 - km, kam, 1.0 - kam};
  }
};

/// Three-media exchange controls; the six pairs each sum to one.
struct TriExchangeParams {
  double k_1phi, k_phi1, k_2phi, k_phi2, k_12, k_21;
  double kappa_1phi, kappa_phi1, kappa_2phi, kappa_phi2, kappa_12, kappa_21;

  static TriExchangeParams from_primary(double k1phi, double k2phi, double k12, double ka1phi,
                                        double ka2phi, double ka12) {
    TriExchangeParams p{k1phi, 1.0 - k1phi, k2phi, 1.0 - k2phi, k12, 1.0 - k12,
                        ka1phi, 1.0 - ka1phi, ka2phi, 1.0 - ka2phi, ka12, 1.0 - ka12};
    p.validate();
    return p;
  }

  void validate() const {
    auto check_pair = [](double a, double b, const char* name) {
      if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw std::invalid_argument(std::string("TriExchangeParams: ") + name +
                                    " outside [0,1]");
      if (std::abs(a + b - 1.0) > 1e-14)
        throw std::invalid_argument(std::string("TriExchangeParams: ") + name +
                                    " must sum to 1");
    };
    check_pair(k_1phi, k_phi1, "k_1phi/k_phi1");
    check_pair(k_2phi, k_phi2, "k_2phi/k_phi2");
    check_pair(k_12, k_21, "k_12/k_21");
    check_pair(kappa_1phi, kappa_phi1, "kappa_1phi/kappa_phi1");
    check_pair(kappa_2phi, kappa_phi2, "kappa_2phi/kappa_phi2");
    check_pair(kappa_12, kappa_21, "kappa_12/kappa_21");
  }
};

/// Right-hand sides of the two-media energy-exchange laws (own-velocity
/// force version):
///   rhs_M   = -k_M f^M.v^M + k_Phi f^Phi.v^Phi
///   rhs_Phi = -k_Phi f^Phi.v^Phi + k_M f^M.v^M
/// f^Phi is derived from f^M through reaction_closed; the force slot of
/// the Phi sample is ignored. The pair sums to zero exactly.
[[nodiscard]] inline std::pair<double, double> exchange_rhs_two(const ExchangeParams& params,
                                                                const MediumSample& m,
                                                                const MediumSample& phi,
                                                                double c) {
  const CompositeFrame frame = composite_frame(m.v, phi.v, c);
  const FourVec f_phi = reaction_closed(force4_f(m, c), frame, c);
  const double a = params.k_m * dot(m.f3, m.v);
  const double b = params.k_phi * dot(f_phi.spatial, phi.v);
  return {b - a, a - b};
}

/// Other-velocity (g) version; the temporal pairing swaps the media:
///   rhs_M   = -kappa_M g^M.v^Phi + kappa_Phi g^Phi.v^M
///   rhs_Phi = -kappa_Phi g^Phi.v^M + kappa_M g^M.v^Phi
[[nodiscard]] inline std::pair<double, double> exchange_rhs_two_g(const ExchangeParams& params,
                                                                  const MediumSample& m,
                                                                  const MediumSample& phi,
                                                                  double c) {
  const CompositeFrame frame = composite_frame(m.v, phi.v, c);
  const FourVec g_phi = reaction_closed(force4_g(m.f3, phi.v, c), frame, c);
  const double a = params.kappa_m * dot(m.f3, phi.v);
  const double b = params.kappa_phi * dot(g_phi.spatial, m.v);
  return {b - a, a - b};
}

/// Velocities and pairwise action forces for media M1, M2 and Phi.
/// f_1phi is the force density M1 exerts on Phi, f_12 the one M1 exerts
/// on M2, and so on; the counter-forces are derived, not supplied.
struct TriMediumState {
  Vec3 v1, v2, v_phi;
  Vec3 f_1phi, f_2phi, f_12;
};

struct TriExchangeRhs {
  double rhs_1 = 0.0, rhs_2 = 0.0, rhs_phi = 0.0;
};

/// Three-media energy-exchange right-hand sides. Every product appears
/// once with each sign across the three equations, so the triple sums to
/// zero up to rounding.
[[nodiscard]] inline TriExchangeRhs exchange_rhs_three(const TriExchangeParams& params,
                                                       const TriMediumState& st, double c) {
  const CompositeFrame fr1 = composite_frame(st.v1, st.v_phi, c);
  const CompositeFrame fr2 = composite_frame(st.v2, st.v_phi, c);
  const CompositeFrame fr12 = composite_frame(st.v1, st.v2, c);
  const Vec3 f_phi1 = reaction_closed(force4_f({st.v1, st.f_1phi}, c), fr1, c).spatial;
  const Vec3 f_phi2 = reaction_closed(force4_f({st.v2, st.f_2phi}, c), fr2, c).spatial;
  const Vec3 f_21 = reaction_closed(force4_f({st.v1, st.f_12}, c), fr12, c).spatial;

  const double a1 = params.k_1phi * dot(st.f_1phi, st.v1);
  const double b1 = params.k_phi1 * dot(f_phi1, st.v_phi);
  const double a2 = params.k_2phi * dot(st.f_2phi, st.v2);
  const double b2 = params.k_phi2 * dot(f_phi2, st.v_phi);
  const double c12 = params.k_12 * dot(st.f_12, st.v1);
  const double c21 = params.k_21 * dot(f_21, st.v2);

  TriExchangeRhs r;
  r.rhs_1 = -a1 + b1 - c12 + c21;
  r.rhs_2 = -a2 + b2 - c21 + c12;
  r.rhs_phi = -b1 + a1 - b2 + a2;
  return r;
}

/// Tensor divergence sources for the two-media laws (f version):
///   source_M = k_M f^M - k_Phi f^Phi,  source_Phi = -source_M.
[[nodiscard]] inline std::pair<FourVec, FourVec> tensor_source_two(const ExchangeParams& params,
                                                                   const FourVec& f_m,
                                                                   const FourVec& f_phi) {
  const FourVec src_m = params.k_m * f_m - params.k_phi * f_phi;
  return {src_m, -src_m};
}

/// g version with the kappa pair.
[[nodiscard]] inline std::pair<FourVec, FourVec> tensor_source_two_g(
    const ExchangeParams& params, const FourVec& g_m, const FourVec& g_phi) {
  const FourVec src_m = params.kappa_m * g_m - params.kappa_phi * g_phi;
  return {src_m, -src_m};
}

/// Combined form of the Phi source after substituting the reaction:
///   -f^M - k_Phi (2/c^2) <f^M, V> V.
[[nodiscard]] inline FourVec tensor_source_phi_combined(double k_phi, const FourVec& f_m,
                                                        const CompositeFrame& frame, double c) {
  const double proj = minkowski(f_m, frame.V_ring);
  return -f_m - (k_phi * 2.0 / (c * c) * proj) * frame.V_ring;
}

/// g-version combined form: g^Phi + kappa_M (2/c^2) <g^Phi, V> V.
[[nodiscard]] inline FourVec tensor_source_phi_combined_g(double kappa_m, const FourVec& g_phi,
                                                          const CompositeFrame& frame, double c) {
  const double proj = minkowski(g_phi, frame.V_ring);
  return g_phi + (kappa_m * 2.0 / (c * c) * proj) * frame.V_ring;
}

/// Direct three-media Phi source with the counter-forces substituted:
///   k_Phi1 f^Phi1 - k_1Phi f^1Phi + k_Phi2 f^Phi2 - k_2Phi f^2Phi.
[[nodiscard]] inline FourVec tensor_source_three_direct(const TriExchangeParams& params,
                                                        const FourVec& f_1phi,
                                                        const FourVec& f_2phi,
                                                        const CompositeFrame& frame1,
                                                        const CompositeFrame& frame2, double c) {
  const FourVec f_phi1 = reaction_closed(f_1phi, frame1, c);
  const FourVec f_phi2 = reaction_closed(f_2phi, frame2, c);
  return params.k_phi1 * f_phi1 - params.k_1phi * f_1phi + params.k_phi2 * f_phi2 -
         params.k_2phi * f_2phi;
}

/// Same reduction for the g version: counter-forces g^1Phi, g^2Phi are
/// derived from the supplied g^Phi1, g^Phi2.
[[nodiscard]] inline FourVec tensor_source_three_direct_g(const TriExchangeParams& params,
                                                          const FourVec& g_phi1,
                                                          const FourVec& g_phi2,
                                                          const CompositeFrame& frame1,
                                                          const CompositeFrame& frame2,
                                                          double c) {
  const FourVec g_1phi = reaction_closed(g_phi1, frame1, c);
  const FourVec g_2phi = reaction_closed(g_phi2, frame2, c);
  return params.kappa_phi1 * g_phi1 - params.kappa_1phi * g_1phi + params.kappa_phi2 * g_phi2 -
         params.kappa_2phi * g_2phi;
}

/// Combined three-media Phi source under the symmetric-interaction
/// reduction (equal Phi couplings to both partner media):
///   -(f^1Phi + f^2Phi) - k_Phi (2/c^2) [<f^1Phi,V1> V1 + <f^2Phi,V2> V2].
[[nodiscard]] inline FourVec tensor_source_three_combined(double k_phi, const FourVec& f_1phi,
                                                          const FourVec& f_2phi,
                                                          const CompositeFrame& frame1,
                                                          const CompositeFrame& frame2,
                                                          double c) {
  const double p1 = minkowski(f_1phi, frame1.V_ring);
  const double p2 = minkowski(f_2phi, frame2.V_ring);
  return -(f_1phi + f_2phi) - (k_phi * 2.0 / (c * c)) *
                                  (p1 * frame1.V_ring + p2 * frame2.V_ring);
}

/// g version of the combined three-media form:
///   (g^Phi1 + g^Phi2) + kappa_M (2/c^2) [<g^Phi1,V1> V1 + <g^Phi2,V2> V2].
[[nodiscard]] inline FourVec tensor_source_three_combined_g(double kappa_m, const FourVec& g_phi1,
                                                            const FourVec& g_phi2,
                                                            const CompositeFrame& frame1,
                                                            const CompositeFrame& frame2,
                                                            double c) {
  const double p1 = minkowski(g_phi1, frame1.V_ring);
  const double p2 = minkowski(g_phi2, frame2.V_ring);
  return (g_phi1 + g_phi2) + (kappa_m * 2.0 / (c * c)) *
                                 (p1 * frame1.V_ring + p2 * frame2.V_ring);
}

/// Validated entry point for the symmetric reduction; requires the
/// matching couplings to coincide.
[[nodiscard]] inline FourVec tensor_source_three(const TriExchangeParams& params,
                                                 const FourVec& f_1phi, const FourVec& f_2phi,
                                                 const CompositeFrame& frame1,
                                                 const CompositeFrame& frame2, double c) {
  if (std::abs(params.k_phi1 - params.k_phi2) > 1e-14 ||
      std::abs(params.k_1phi - params.k_2phi) > 1e-14)
    throw std::invalid_argument(
        "tensor_source_three: symmetric reduction requires equal Phi couplings");
  return tensor_source_three_combined(params.k_phi1, f_1phi, f_2phi, frame1, frame2, c);
}

/// Lorentz 4-force split over the positive and negative charge carriers:
///   F+- = { rho E + rho [v, B], rho (E . v) / c }.
[[nodiscard]] inline std::pair<FourVec, FourVec> lorentz_force_split(
    double rho_plus, double rho_minus, Vec3 v_plus, Vec3 v_minus, Vec3 e, Vec3 b, double c) {
  if (!(rho_plus >= 0.0)) throw std::invalid_argument("lorentz_force_split: rho_plus < 0");
  if (!(rho_minus <= 0.0)) throw std::invalid_argument("lorentz_force_split: rho_minus > 0");
  detail::require_subluminal(v_plus, c, "lorentz_force_split");
  detail::require_subluminal(v_minus, c, "lorentz_force_split");
  const FourVec f_plus{rho_plus * (e + cross(v_plus, b)), rho_plus * dot(e, v_plus) / c};
  const FourVec f_minus{rho_minus * (e + cross(v_minus, b)), rho_minus * dot(e, v_minus) / c};
  return {f_plus, f_minus};
}

/// Vacuum energy-momentum source with the Lorentz split substituted:
///   (F+ + F-) + coeff (2/c^2) [<F+,V1> V1 + <F-,V2> V2]
/// where V1, V2 are the composite 4-velocities of (v+, vPhi) and
/// (v-, vPhi). coeff = 0 recovers the classical F+ + F- exactly.
[[nodiscard]] inline FourVec vacuum_emt_source(const FourVec& f_plus, const FourVec& f_minus,
                                               const CompositeFrame& frame1,
                                               const CompositeFrame& frame2, double coeff,
                                               double c) {
  const double p1 = minkowski(f_plus, frame1.V_ring);
  const double p2 = minkowski(f_minus, frame2.V_ring);
  return (f_plus + f_minus) + (coeff * 2.0 / (c * c)) *
                                  (p1 * frame1.V_ring + p2 * frame2.V_ring);
}

}  // namespace vaclab
