#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "test_support.hpp"
#include "vaclab/axisym.hpp"
#include "vaclab/diagnostics.hpp"
#include "vaclab/random.hpp"
#include "vaclab/solutions.hpp"

using namespace vaclab;

namespace {
const PhysicalConstants kNat = PhysicalConstants::natural();

// two-dimensional central differences on a plain function of (s, z)
double fd2_s(const std::function<double(double, double)>& f, double s, double z, double h) {
  return (f(s + h, z) - f(s - h, z)) / (2.0 * h);
}
double fd2_z(const std::function<double(double, double)>& f, double s, double z, double h) {
  return (f(s, z + h) - f(s, z - h)) / (2.0 * h);
}
double fd2_ss(const std::function<double(double, double)>& f, double s, double z, double h) {
  return (f(s + h, z) - 2.0 * f(s, z) + f(s - h, z)) / (h * h);
}
double fd2_zz(const std::function<double(double, double)>& f, double s, double z, double h) {
  return (f(s, z + h) - 2.0 * f(s, z) + f(s, z - h)) / (h * h);
}

ChartField2 random_chart(Rng& rng) {
  const Func1 fs = func1_poly({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-0.5, 0.5)}) *
                   func1_exp(1.0, rng.uniform(-0.8, -0.2));
  const Func1 gz = func1_sin(rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5)) +
                   func1_poly({1.0, rng.uniform(-0.3, 0.3)});
  return chart2_separable(fs, gz);
}
}  // namespace

TEST_CASE("chart fields expose consistent derivatives") {
  Rng rng(61);
  const ChartField2 u = random_chart(rng);
  for (int i = 0; i < 20; ++i) {
    const double s = rng.uniform(0.2, 2.0), z = rng.uniform(-1.5, 1.5);
    CHECK(u.ds(s, z) == Catch::Approx(fd2_s(u.value, s, z, 1e-5)).margin(1e-7));
    CHECK(u.dz(s, z) == Catch::Approx(fd2_z(u.value, s, z, 1e-5)).margin(1e-7));
    CHECK(u.dss(s, z) == Catch::Approx(fd2_ss(u.value, s, z, 1e-4)).margin(1e-5));
    CHECK(u.dzz(s, z) == Catch::Approx(fd2_zz(u.value, s, z, 1e-4)).margin(1e-5));
  }
}

TEST_CASE("chart laplacian matches the Cartesian laplacian") {
  Rng rng(62);
  const ChartField2 u = random_chart(rng);
  const ScalarField cart = to_cartesian(u);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x = rng.box(-1.3, 1.3);
    if (x.x * x.x + x.y * x.y < 0.05) continue;
    const Point4 p = at(x);
    const double lap_chart = chart_laplacian3(u, x.x * x.x + x.y * x.y, x.z);
    const FdScalar fd = fd_scalar(cart, p, 1e-4);
    CHECK(lap_chart == Catch::Approx(fd.laplacian).margin(1e-6 * std::max(1.0, std::abs(lap_chart))));
    CHECK(laplacian(cart, p) == Catch::Approx(lap_chart).margin(1e-12));
  }
}

TEST_CASE("power-family eigen identity") {
  CHECK(uk_identity_residual(0.0, AxiPoint(0.7, -1.2)) == Catch::Approx(0.0).margin(1e-12));
  CHECK(uk_identity_residual(1.0, AxiPoint(1.0, 0.0)) == Catch::Approx(0.0).margin(1e-11));
  CHECK(uk_identity_residual(-0.5, AxiPoint(2.0, 3.0)) == Catch::Approx(0.0).margin(1e-10));

  // cross-check the k = -0.5 case against finite differences in the chart
  const ChartField2 u = chart2_uk(-0.5);
  const double s = 2.0, z = 3.0;
  const double lap_fd = 4.0 * (fd2_s(u.value, s, z, 1e-5) + s * fd2_ss(u.value, s, z, 1e-4)) +
                        fd2_zz(u.value, s, z, 1e-4);
  CHECK(s * lap_fd - 4.0 * 0.25 * u.value(s, z) == Catch::Approx(0.0).margin(1e-4));

  CHECK_THROWS_AS(uk_identity_residual(1.0, AxiPoint(0.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(AxiPoint(-0.1, 0.0), std::invalid_argument);
}

TEST_CASE("nonlinear ansatz residual") {
  Rng rng(63);
  SECTION("vanishes when the one-variable slots are zero") {
    const FGHU q{func1_constant(0.0), func1_constant(0.0), func1_constant(0.0),
                 random_chart(rng)};
    CHECK(nonlinear_ansatz_residual(q, AxiPoint(0.8, 0.3), kNat) == 0.0);
  }
  SECTION("linear slots reduce to the linear residual") {
    const double a0 = 1.3, a = 0.4, b = -0.8;
    const ChartField2 u = random_chart(rng);
    const FGHU q{func1_linear(a0), func1_linear(a), func1_linear(b), u};
    for (int i = 0; i < 25; ++i) {
      const AxiPoint p(rng.uniform(0.2, 2.0), rng.uniform(-1.0, 1.0));
      const double nl = nonlinear_ansatz_residual(q, p, kNat);
      const double lin = linear_ansatz_residual(u, a0, a, b, p, kNat);
      CHECK(nl == Catch::Approx(lin).margin(1e-11 * std::max(1.0, std::abs(lin))));
    }
  }
  SECTION("matches a finite-difference recomputation on generic inputs") {
    const Func1 f = func1_poly({0.3, 1.1, -0.2});
    const Func1 g = func1_sin(0.7, 1.3) + func1_linear(0.5);
    const Func1 h = func1_exp(0.4, -0.6);
    const ChartField2 u = random_chart(rng);
    const FGHU q{f, g, h, u};
    for (int i = 0; i < 12; ++i) {
      const double s = rng.uniform(0.3, 1.8), z = rng.uniform(-1.0, 1.0);
      // composites rebuilt from values only, differentiated numerically
      auto fu = [&](double ss, double zz) { return f.value(u.value(ss, zz)); };
      auto gu = [&](double ss, double zz) { return g.value(u.value(ss, zz)); };
      const double h_ = 1e-4;
      const double lap_fu = 4.0 * (fd2_s(fu, s, z, h_) + s * fd2_ss(fu, s, z, h_)) +
                            fd2_zz(fu, s, z, h_);
      const double uv = u.value(s, z);
      const double fp = (f.value(uv + h_) - f.value(uv - h_)) / (2.0 * h_);
      const double gp = (g.value(uv + h_) - g.value(uv - h_)) / (2.0 * h_);
      const double hp = (h.value(uv + h_) - h.value(uv - h_)) / (2.0 * h_);
      const double lhs = s / (kNat.c * kNat.c) * lap_fu * fp;
      const double rhs = 4.0 * s * gp * fd2_ss(gu, s, z, h_) + gp * fd2_zz(gu, s, z, h_) +
                         h.value(uv) * hp;
      const double expected = lhs - rhs;
      CHECK(nonlinear_ansatz_residual(q, AxiPoint(s, z), kNat) ==
            Catch::Approx(expected).margin(1e-6 * std::max(1.0, std::abs(expected))));
    }
  }
}

TEST_CASE("linear ansatz residual") {
  SECTION("zero field") {
    const ChartField2 zero = chart2_of_s(func1_constant(0.0));
    CHECK(linear_ansatz_residual(zero, 1.0, 0.5, 0.5, AxiPoint(1.0, 1.0), kNat) == 0.0);
  }
  SECTION("harmonic k = 0 member with a = b = 0") {
    const ChartField2 u0 = chart2_uk(0.0);
    for (double s : {0.3, 1.0, 1.7})
      for (double z : {-1.0, 0.4})
        CHECK(linear_ansatz_residual(u0, kNat.c, 0.0, 0.0, AxiPoint(s, z), kNat) ==
              Catch::Approx(0.0).margin(1e-11));
  }
  SECTION("the power family balances with b = 2k a0 / c") {
    for (double k : {-1.0, -0.5, 0.5, 1.0, 2.0}) {
      const ChartField2 u = chart2_uk(k);
      Rng rng(64);
      for (int i = 0; i < 30; ++i) {
        double s = rng.uniform(0.05, 2.0), z = rng.uniform(-2.0, 2.0);
        if (s + z * z < 0.09) continue;
        const double res =
            linear_ansatz_residual(u, 1.0, 0.0, 2.0 * k / kNat.c, AxiPoint(s, z), kNat);
        CHECK(std::abs(res) <= 1e-10);
      }
    }
  }
}

TEST_CASE("ansatz solution generation") {
  SECTION("reproduces the power-family fields with a = 0, b = 2k/c") {
    const double k = 1.0;
    const EMSolution direct = uk_solution(k, kNat);
    const EMSolution built = ansatz_solution(chart2_uk(k), 1.0, 0.0, 2.0 * k / kNat.c, kNat);
    Rng rng(65);
    for (int i = 0; i < 50; ++i) {
      Vec3 x = rng.box(-2.0, 2.0);
      if (x.x * x.x + x.y * x.y < 0.05 || norm(x) < 0.4) continue;
      const Point4 p = at(x);
      const double scale_e = std::max(1.0, norm_inf(direct.E.value(p)));
      const double scale_b = std::max(1.0, norm_inf(direct.B.value(p)));
      CHECK(norm_inf(direct.E.value(p) - built.E.value(p)) <= 1e-12 * scale_e);
      CHECK(norm_inf(direct.B.value(p) - built.B.value(p)) <= 1e-12 * scale_b);
    }
  }
  SECTION("a = b = 0 yields a pure gradient field") {
    Rng rng(66);
    const ChartField2 u = random_chart(rng);
    const EMSolution sol = ansatz_solution(u, 2.0, 0.0, 0.0, kNat);
    const Point4 p{0.8, -0.3, 0.5, 0.0};
    CHECK(norm_inf(sol.B.value(p)) == 0.0);
    CHECK(norm_inf(sol.E.value(p) - 2.0 * to_cartesian(u).gradient(p)) < 1e-14);
  }
  SECTION("generated fields agree with the finite-difference oracle") {
    Rng rng(72);
    const EMSolution sol = ansatz_solution(random_chart(rng), 1.2, 0.4, -0.6, kNat);
    const Point4 p{0.9, 0.5, -0.3, 0.0};
    CHECK(vtest::vector_fd_order(sol.E, p) >= 1.9);
    CHECK(vtest::vector_fd_order(sol.B, p) >= 1.9);
  }
  SECTION("solutions of the linear reduction generate nonlinear-system solutions") {
    const double k = 0.5;
    const EMSolution sol = ansatz_solution(chart2_uk(k), 1.0, 0.0, 2.0 * k / kNat.c, kNat);
    Rng rng(67);
    for (int i = 0; i < 60; ++i) {
      Vec3 x = rng.box(-2.0, 2.0);
      if (x.x * x.x + x.y * x.y < 0.3 || norm(x) < 0.6) continue;
      const PointResidual r = residual_system1(sol, at(x));
      CHECK(norm_inf(r.faraday) <= 1e-10);
      CHECK(std::abs(r.div_b) <= 1e-10);
      CHECK(r.force_normalized <= 1e-10);
      CHECK(r.power_normalized <= 1e-10);
    }
  }
}

TEST_CASE("ansatz force equals the chart residual times the gradient") {
  // For ANY chart field u (solution or not), the generated fields obey
  //   rho E + j x B = (eps0 c^2 / s) * linear_residual(u) * grad u
  //   (E, j) = 0
  // which ties the Cartesian diagnostics path (jacobians, curls) to the
  // chart-side algebra through an independent route.
  Rng rng(73);
  const ChartField2 u = random_chart(rng);
  const double a0 = 1.1, a = 0.5, b = -0.7;
  const EMSolution sol = ansatz_solution(u, a0, a, b, kNat);
  int tested = 0;
  while (tested < 30) {
    const Vec3 x = rng.box(-1.4, 1.4);
    const double s = x.x * x.x + x.y * x.y;
    if (s < 0.2) continue;
    ++tested;
    const Point4 p = at(x);
    const DerivedState d = derived_state(sol, p);
    const double res = linear_ansatz_residual(u, a0, a, b, AxiPoint(s, x.z), kNat);
    const Vec3 grad_u{2.0 * x.x * u.ds(s, x.z), 2.0 * x.y * u.ds(s, x.z), u.dz(s, x.z)};
    const Vec3 expected = (kNat.eps0 * kNat.c * kNat.c / s * res) * grad_u;
    CHECK(norm_inf(d.force - expected) <= 1e-10 * std::max(1.0, norm_inf(expected)));
    CHECK(residual_system1(sol, p).power_normalized <= 1e-11);
    CHECK(norm_inf(residual_system1(sol, p).faraday) <= 1e-12);
    CHECK(std::abs(residual_system1(sol, p).div_b) <= 1e-12);
  }
}

TEST_CASE("superposition inside the linear ansatz") {
  // z-translates of a solution still solve the linear reduction, and the
  // generated fields superpose into another nonlinear-system solution
  const double k = 1.0, b = 2.0 * k / kNat.c;
  const ChartField2 u1 = chart2_uk(k);
  const ChartField2 u2 = translate_z(chart2_uk(k), 1.5);
  const ChartField2 sum = u1 + u2;
  Rng rng(68);
  for (int i = 0; i < 40; ++i) {
    double s = rng.uniform(0.05, 2.0), z = rng.uniform(-2.0, 2.0);
    if (s + z * z < 0.09 || s + (z + 1.5) * (z + 1.5) < 0.09) continue;
    const AxiPoint p(s, z);
    CHECK(std::abs(linear_ansatz_residual(u2, 1.0, 0.0, b, p, kNat)) <= 1e-10);
    CHECK(std::abs(linear_ansatz_residual(sum, 1.0, 0.0, b, p, kNat)) <= 1e-10);
  }
  const EMSolution s1 = ansatz_solution(u1, 1.0, 0.0, b, kNat);
  const EMSolution s2 = ansatz_solution(u2, 1.0, 0.0, b, kNat);
  const EMSolution both = ansatz_solution(sum, 1.0, 0.0, b, kNat);
  for (int i = 0; i < 40; ++i) {
    Vec3 x = rng.box(-2.0, 2.0);
    const double s = x.x * x.x + x.y * x.y;
    if (s < 0.3 || s + x.z * x.z < 0.2 || s + (x.z + 1.5) * (x.z + 1.5) < 0.2) continue;
    const Point4 p = at(x);
    CHECK(norm_inf(superpose(s1, s2).E.value(p) - both.E.value(p)) < 1e-13);
    const PointResidual r = residual_system1(both, p);
    CHECK(r.force_normalized <= 1e-10);
    CHECK(r.power_normalized <= 1e-10);
  }
}

TEST_CASE("z-translation commutes with the linear residual") {
  Rng rng(69);
  const ChartField2 u = random_chart(rng);
  const double lambda = 0.8;
  const ChartField2 moved = translate_z(u, lambda);
  for (int i = 0; i < 30; ++i) {
    const double s = rng.uniform(0.2, 2.0), z = rng.uniform(-1.0, 1.0);
    const double r_moved =
        linear_ansatz_residual(moved, 1.2, 0.3, 0.7, AxiPoint(s, z), kNat);
    const double r_at = linear_ansatz_residual(u, 1.2, 0.3, 0.7, AxiPoint(s, z + lambda), kNat);
    CHECK(r_moved == Catch::Approx(r_at).margin(1e-12 * std::max(1.0, std::abs(r_at))));
  }
}

TEST_CASE("off-axis translation breaks the superposition") {
  const double k = 1.0, b = 2.0 * k / kNat.c;
  const EMSolution s1 = ansatz_solution(chart2_uk(k), 1.0, 0.0, b, kNat);
  const EMSolution s2 = translate(s1, {1.3, 0.0, 0.0});
  const EMSolution sum = superpose(s1, s2);
  const GridSpec grid({0.2, 0.15, -0.6}, {1.1, 0.8, 0.6}, {9, 9, 9}, 0.0);
  const ResidualReport rep = sup_residuals(sum, grid, 1);
  CHECK(rep.sup.force_normalized > 1e-9);  // > 10x the single-solution tolerance
  CHECK(sup_residuals(s1, grid, 1).sup.force_normalized <= 1e-10);
}

TEST_CASE("time-dependent potential-pair residuals") {
  SECTION("zero potentials") {
    const ChartField3 zero = chart3_separable(func1_constant(0.0), func1_constant(0.0),
                                              func1_constant(0.0));
    const auto r = potential_pair_residual(zero, zero, AxiPoint(1.0, 0.5, 0.2), kNat);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
  }
  SECTION("stationary canonical pairs satisfy the full system") {
    const Func1 psi = func1_poly({0.0, 1.0, 0.5});
    const auto [psi2, g2] = canonical_stationary_pair(psi, kNat);
    const ChartField3 psi3 = chart3_from2(psi2);
    const ChartField3 phi3 = phi_from_g(g2);
    for (double s : {0.2, 0.7, 1.5})
      for (double z : {-1.0, 0.3, 0.9}) {
        const auto r = potential_pair_residual(psi3, phi3, AxiPoint(s, z, 0.0), kNat);
        CHECK(std::abs(r[0]) <= 1e-10);
        CHECK(std::abs(r[1]) <= 1e-10);
      }
  }
  SECTION("generic potentials match a finite-difference recomputation") {
    Rng rng(70);
    const ChartField3 psi = chart3_separable(func1_poly({0.2, 0.8, -0.1}),
                                             func1_sin(0.6, 1.1), func1_cos(1.0, 0.7));
    const ChartField3 phi = chart3_separable(func1_exp(0.5, -0.4),
                                             func1_poly({1.0, 0.3}), func1_sin(0.8, 0.9));
    for (int i = 0; i < 10; ++i) {
      const double s = rng.uniform(0.3, 1.5), z = rng.uniform(-1.0, 1.0),
                   t = rng.uniform(-0.5, 0.5);
      const double h = 1e-4, c2 = kNat.c * kNat.c;
      auto num = [&](const ChartField3& f, int ds_, int dz_, int dt_) {
        // low-order mixed central differences of the value slot
        auto val = [&](double ss, double zz, double tt) { return f.value(ss, zz, tt); };
        if (ds_ == 1 && dz_ == 0 && dt_ == 0)
          return (val(s + h, z, t) - val(s - h, z, t)) / (2 * h);
        if (ds_ == 0 && dz_ == 1 && dt_ == 0)
          return (val(s, z + h, t) - val(s, z - h, t)) / (2 * h);
        if (ds_ == 0 && dz_ == 0 && dt_ == 1)
          return (val(s, z, t + h) - val(s, z, t - h)) / (2 * h);
        if (ds_ == 2 && dz_ == 0 && dt_ == 0)
          return (val(s + h, z, t) - 2 * val(s, z, t) + val(s - h, z, t)) / (h * h);
        if (ds_ == 0 && dz_ == 2 && dt_ == 0)
          return (val(s, z + h, t) - 2 * val(s, z, t) + val(s, z - h, t)) / (h * h);
        if (ds_ == 0 && dz_ == 0 && dt_ == 2)
          return (val(s, z, t + h) - 2 * val(s, z, t) + val(s, z, t - h)) / (h * h);
        if (ds_ == 1 && dz_ == 1)
          return (val(s + h, z + h, t) - val(s + h, z - h, t) - val(s - h, z + h, t) +
                  val(s - h, z - h, t)) /
                 (4 * h * h);
        if (ds_ == 1 && dt_ == 1)
          return (val(s + h, z, t + h) - val(s + h, z, t - h) - val(s - h, z, t + h) +
                  val(s - h, z, t - h)) /
                 (4 * h * h);
        return (val(s, z + h, t + h) - val(s, z + h, t - h) - val(s, z - h, t + h) +
                val(s, z - h, t - h)) /
               (4 * h * h);
      };
      const double lap_psi = 4.0 * (num(psi, 1, 0, 0) + s * num(psi, 2, 0, 0)) +
                             num(psi, 0, 2, 0);
      const double r1_fd =
          num(phi, 1, 0, 0) * (4.0 * c2 * (num(phi, 1, 0, 0) + s * num(phi, 2, 0, 0)) -
                               num(phi, 0, 0, 2) - num(psi, 0, 1, 1)) -
          num(psi, 1, 0, 0) * (lap_psi + num(phi, 0, 1, 1));
      const double r2_fd =
          num(phi, 1, 0, 0) * (4.0 * c2 * s * num(phi, 1, 1, 0) + 4.0 * s * num(psi, 1, 0, 1)) -
          (num(phi, 0, 0, 1) + num(psi, 0, 1, 0)) * (lap_psi + num(phi, 0, 1, 1));
      const auto r = potential_pair_residual(psi, phi, AxiPoint(s, z, t), kNat);
      CHECK(r[0] == Catch::Approx(r1_fd).margin(1e-6 * std::max(1.0, std::abs(r1_fd))));
      CHECK(r[1] == Catch::Approx(r2_fd).margin(1e-6 * std::max(1.0, std::abs(r2_fd))));
    }
  }
}

TEST_CASE("stationary pair residuals") {
  SECTION("zero g with a chart-harmonic potential") {
    // psi = log(s) satisfies 4 d_s(s d_s psi) = 0 and is z-independent
    ChartField2 logs;
    logs.value = [](double s, double) { return std::log(s); };
    logs.ds = [](double s, double) { return 1.0 / s; };
    logs.dz = [](double, double) { return 0.0; };
    logs.dss = [](double s, double) { return -1.0 / (s * s); };
    logs.dsz = [](double, double) { return 0.0; };
    logs.dzz = [](double, double) { return 0.0; };
    const ChartField2 zero = chart2_of_s(func1_constant(0.0));
    for (double s : {0.3, 1.0, 2.5}) {
      const auto r = stationary_pair_residual(logs, zero, AxiPoint(s, 0.7), kNat);
      CHECK(std::abs(r[0]) <= 1e-12);
      CHECK(std::abs(r[1]) <= 1e-12);
    }
  }
  SECTION("canonical pairs: psi = s^2 checked against both sides") {
    const Func1 psi = func1_poly({0.0, 0.0, 1.0});
    const auto [psi2, g2] = canonical_stationary_pair(psi, kNat);
    for (double s = 0.1; s <= 2.0; s += 0.19) {
      const AxiPoint p(s, 0.0);
      const auto r = stationary_pair_residual(psi2, g2, p, kNat);
      // lhs = 4 c^2 g g_s with g = 2 s^2 / c; rhs = s (16 s) (2 s)
      const double lhs = 4.0 * kNat.c * kNat.c * (2.0 * s * s / kNat.c) * (4.0 * s / kNat.c);
      const double rhs = s * (16.0 * s) * (2.0 * s);
      CHECK(lhs == Catch::Approx(rhs).margin(1e-12 * std::max(1.0, rhs)));
      CHECK(std::abs(r[0]) <= 1e-10 * std::max(1.0, rhs));
      CHECK(r[1] == 0.0);  // z-independent pair: second residual identically zero
    }
  }
  SECTION("the generated stationary fields solve the nonlinear system") {
    const Func1 psi = func1_exp(1.0, -0.7);
    const EMSolution sol = stationary_pair_solution(psi, kNat);
    Rng rng(71);
    for (int i = 0; i < 60; ++i) {
      const Point4 p = at(rng.box(-1.5, 1.5));
      const PointResidual r = residual_system1(sol, p);
      CHECK(norm_inf(r.faraday) <= 1e-11);
      CHECK(std::abs(r.div_b) <= 1e-11);
      CHECK(r.force_normalized <= 1e-11);
      CHECK(r.power_normalized <= 1e-11);
    }
  }
}
