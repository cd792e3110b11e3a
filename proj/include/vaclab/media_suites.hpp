#pragma once

// Randomized validation suites for the interacting-media formulas. Each
// suite draws its own deterministic stream from the top-level seed and
// reports the worst deviation it saw against its tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "vaclab/constants.hpp"
#include "vaclab/random.hpp"
#include "vaclab/relmedia.hpp"

namespace vaclab {

struct MediaSuiteConfig {
  std::uint64_t seed = 1;
  int cases = 1000;
  double velocity_cap = 0.99;  // fraction of c; keeps gamma conditioning modest
  double tol_frame = 1e-11;
  double tol_gamma = 1e-12;
  double tol_reciprocity = 1e-11;
  double tol_product = 1e-12;
  double tol_exchange = 1e-13;
  double tol_combined = 1e-12;
  double tol_boost = 1e-12;
};

struct MediaSuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool pass() const { return failures == 0; }
};

[[nodiscard]] inline std::vector<MediaSuiteResult> run_media_suites(
    const MediaSuiteConfig& cfg, const PhysicalConstants& constants) {
  const double c = constants.c;
  const double vmax = cfg.velocity_cap * c;
  std::vector<MediaSuiteResult> out;

  auto make = [&](const std::string& name, double tol) {
    MediaSuiteResult r;
    r.name = name;
    r.cases = cfg.cases;
    r.tolerance = tol;
    return r;
  };
  auto record = [](MediaSuiteResult& r, double dev) {
    r.max_deviation = std::max(r.max_deviation, dev);
    if (dev > r.tolerance) ++r.failures;
  };

  {  // In the composite frame the two media move with opposite velocities.
    auto r = make("composite_frame_opposite_velocities", cfg.tol_frame);
    Rng rng(cfg.seed ^ 0x1ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const Vec3 vm = rng.velocity(vmax), vp = rng.velocity(vmax);
      const CompositeFrame f = composite_frame(vm, vp, c);
      const Vec3 wm = velocity_in_frame(vm, f.v_ring, c);
      const Vec3 wp = velocity_in_frame(vp, f.v_ring, c);
      record(r, norm_inf(wm + wp) / c);
    }
    out.push_back(r);
  }

  {  // Closed-form composite gamma equals gamma(v_ring).
    auto r = make("composite_gamma_closed_form", cfg.tol_gamma);
    Rng rng(cfg.seed ^ 0x2ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const CompositeFrame f = composite_frame(rng.velocity(vmax), rng.velocity(vmax), c);
      record(r, std::abs(f.gamma_ring - gamma(f.v_ring, c)) / f.gamma_ring);
    }
    out.push_back(r);
  }

  {  // Closed reaction formula against the boost-mirror-boost oracle (f version).
    auto r = make("reciprocity_f_closed_vs_oracle", cfg.tol_reciprocity);
    Rng rng(cfg.seed ^ 0x3ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const Vec3 vm = rng.velocity(vmax), vp = rng.velocity(vmax);
      const Vec3 f3 = rng.box(-1.0, 1.0);
      const CompositeFrame frame = composite_frame(vm, vp, c);
      const FourVec closed = reaction_closed(force4_f({vm, f3}, c), frame, c);
      const FourVec oracle = reaction_oracle(f3, vm, vp, c);
      record(r, max_abs(closed - oracle));
    }
    out.push_back(r);
  }

  {  // Same check with the other-velocity (g) temporal pairing.
    auto r = make("reciprocity_g_closed_vs_oracle", cfg.tol_reciprocity);
    Rng rng(cfg.seed ^ 0x4ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const Vec3 vm = rng.velocity(vmax), vp = rng.velocity(vmax);
      const Vec3 g3 = rng.box(-1.0, 1.0);
      const CompositeFrame frame = composite_frame(vm, vp, c);
      const FourVec g_m = force4_g(g3, vp, c);
      const FourVec closed = reaction_closed(g_m, frame, c);
      // mirror in the composite frame, independent of the force version
      const FourVec in_frame = boost(g_m, frame.v_ring, c);
      const FourVec oracle = boost(FourVec{-in_frame.spatial, in_frame.temporal},
                                   -frame.v_ring, c);
      record(r, max_abs(closed - oracle));
    }
    out.push_back(r);
  }

  {  // <f^M, V> = <f^Phi, V> for both versions.
    auto r = make("action_reaction_projection", cfg.tol_product);
    Rng rng(cfg.seed ^ 0x5ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const Vec3 vm = rng.velocity(vmax), vp = rng.velocity(vmax);
      const Vec3 f3 = rng.box(-1.0, 1.0);
      const CompositeFrame frame = composite_frame(vm, vp, c);
      for (const FourVec& f4 : {force4_f({vm, f3}, c), force4_g(f3, vp, c)}) {
        const FourVec rx = reaction_closed(f4, frame, c);
        const double lhs = minkowski(f4, frame.V_ring);
        const double rhs = minkowski(rx, frame.V_ring);
        record(r, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
    out.push_back(r);
  }

  {  // Two-media exchange right-hand sides sum to zero.
    auto r = make("exchange_two_conservation", cfg.tol_exchange);
    Rng rng(cfg.seed ^ 0x6ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const ExchangeParams params = ExchangeParams::from_primary(rng.unit(), rng.unit());
      const MediumSample m{rng.velocity(vmax), rng.box(-1.0, 1.0)};
      const MediumSample phi{rng.velocity(vmax), Vec3{}};
      const auto [rm, rp] = exchange_rhs_two(params, m, phi, c);
      const auto [sm, sp] = exchange_rhs_two_g(params, m, phi, c);
      record(r, std::abs(rm + rp));
      record(r, std::abs(sm + sp));
    }
    out.push_back(r);
  }

  {  // Three-media exchange right-hand sides sum to zero.
    auto r = make("exchange_three_conservation", cfg.tol_exchange);
    Rng rng(cfg.seed ^ 0x7ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const TriExchangeParams params = TriExchangeParams::from_primary(
          rng.unit(), rng.unit(), rng.unit(), rng.unit(), rng.unit(), rng.unit());
      TriMediumState st;
      st.v1 = rng.velocity(vmax);
      st.v2 = rng.velocity(vmax);
      st.v_phi = rng.velocity(vmax);
      st.f_1phi = rng.box(-1.0, 1.0);
      st.f_2phi = rng.box(-1.0, 1.0);
      st.f_12 = rng.box(-1.0, 1.0);
      const TriExchangeRhs rhs = exchange_rhs_three(params, st, c);
      record(r, std::abs(rhs.rhs_1 + rhs.rhs_2 + rhs.rhs_phi));
    }
    out.push_back(r);
  }

  {  // Reaction substituted into the two-media sources gives the combined form.
    auto r = make("tensor_source_two_combined", cfg.tol_combined);
    Rng rng(cfg.seed ^ 0x8ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const ExchangeParams params = ExchangeParams::from_primary(rng.unit(), rng.unit());
      const Vec3 vm = rng.velocity(vmax), vp = rng.velocity(vmax);
      const Vec3 f3 = rng.box(-1.0, 1.0);
      const CompositeFrame frame = composite_frame(vm, vp, c);
      const FourVec f_m = force4_f({vm, f3}, c);
      const FourVec f_phi = reaction_closed(f_m, frame, c);
      const FourVec direct = tensor_source_two(params, f_m, f_phi).second;
      const FourVec combined = tensor_source_phi_combined(params.k_phi, f_m, frame, c);
      record(r, max_abs(direct - combined));

      const FourVec g_m = force4_g(f3, vp, c);
      const FourVec g_phi = reaction_closed(g_m, frame, c);
      const FourVec direct_g = tensor_source_two_g(params, g_m, g_phi).second;
      const FourVec combined_g = tensor_source_phi_combined_g(params.kappa_m, g_phi, frame, c);
      record(r, max_abs(direct_g - combined_g));
    }
    out.push_back(r);
  }

  {  // Direct three-media source equals the combined reduction.
    auto r = make("tensor_source_three_combined", cfg.tol_combined);
    Rng rng(cfg.seed ^ 0x9ull);
    for (int i = 0; i < cfg.cases; ++i) {
      const double kphi = rng.unit(), kam = rng.unit();
      // symmetric reduction: equal Phi couplings to both partner media
      const TriExchangeParams params = TriExchangeParams::from_primary(
          1.0 - kphi, 1.0 - kphi, rng.unit(), kam, kam, rng.unit());
      const Vec3 v1 = rng.velocity(vmax), v2 = rng.velocity(vmax), vp = rng.velocity(vmax);
      const CompositeFrame fr1 = composite_frame(v1, vp, c);
      const CompositeFrame fr2 = composite_frame(v2, vp, c);
      const FourVec f1 = force4_f({v1, rng.box(-1.0, 1.0)}, c);
      const FourVec f2 = force4_f({v2, rng.box(-1.0, 1.0)}, c);
      record(r, max_abs(tensor_source_three_direct(params, f1, f2, fr1, fr2, c) -
                        tensor_source_three_combined(kphi, f1, f2, fr1, fr2, c)));

      const FourVec gp1 = force4_g(rng.box(-1.0, 1.0), v1, c);
      const FourVec gp2 = force4_g(rng.box(-1.0, 1.0), v2, c);
      record(r, max_abs(tensor_source_three_direct_g(params, gp1, gp2, fr1, fr2, c) -
                        tensor_source_three_combined_g(kam, gp1, gp2, fr1, fr2, c)));
    }
    out.push_back(r);
  }

  {  // Boosts preserve the indefinite inner product and 4-velocity norm.
    auto r = make("boost_invariance", cfg.tol_boost);
    Rng rng(cfg.seed ^ 0xaull);
    for (int i = 0; i < cfg.cases; ++i) {
      const Vec3 w = rng.velocity(vmax);
      const FourVec a{rng.box(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const FourVec b{rng.box(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const double before = minkowski(a, b);
      const double after = minkowski(boost(a, w, c), boost(b, w, c));
      record(r, std::abs(after - before) / std::max(1.0, std::abs(before)));
      const FourVec u = boost(four_velocity(rng.velocity(vmax), c), w, c);
      record(r, std::abs(minkowski(u, u) + c * c) / (c * c));
    }
    out.push_back(r);
  }

  return out;
}

}  // namespace vaclab
