#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_support.hpp"
#include "vaclab/diagnostics.hpp"
#include "vaclab/profiles.hpp"
#include "vaclab/random.hpp"
#include "vaclab/report.hpp"
#include "vaclab/solutions.hpp"

using namespace vaclab;

namespace {
const PhysicalConstants kNat = PhysicalConstants::natural();

EMSolution zero_solution() {
  EMSolution s;
  s.constants = kNat;
  s.E = vector_constant({0, 0, 0});
  s.B = vector_constant({0, 0, 0});
  return s;
}
}  // namespace

TEST_CASE("derived state of the zero solution") {
  const DerivedState d = derived_state(zero_solution(), {0.1, 0.2, 0.3, 0.4});
  CHECK(d.rho == 0.0);
  CHECK(norm_inf(d.j) == 0.0);
  CHECK(norm_inf(d.force) == 0.0);
  CHECK(d.power == 0.0);
}

TEST_CASE("photon-wave charge and current densities") {
  const Profile prof = mollifier({0, 0, 0}, 1.0, 1.7);
  const EMSolution wave = photon_wave(prof, kNat);
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const Point4 p = at(rng.box(-0.9, 0.9), rng.uniform(-0.1, 0.1));
    const Point4 shifted{p.x - kNat.c * p.t, p.y, p.z, 0.0};
    const Mat3 h = prof.a0.hessian(shifted);
    const double lap_t = h(1, 1) + h(2, 2);  // transverse laplacian of the profile
    const DerivedState d = derived_state(wave, p);
    CHECK(d.rho == Catch::Approx(kNat.eps0 * kNat.c * lap_t).margin(1e-13));
    CHECK(d.j.x == Catch::Approx(kNat.eps0 * kNat.c * kNat.c * lap_t).margin(1e-13));
    CHECK(d.j.y == 0.0);
    CHECK(d.j.z == 0.0);
  }
  // cross-check one point against pure finite differences
  const Point4 p{0.2, 0.3, -0.1, 0.05};
  const FdVector fdB = fd_vector(wave.B, p, 1e-4);
  const FdVector fdE = fd_vector(wave.E, p, 1e-4);
  const Vec3 curl_b{fdB.jacobian(2, 1) - fdB.jacobian(1, 2),
                    fdB.jacobian(0, 2) - fdB.jacobian(2, 0),
                    fdB.jacobian(1, 0) - fdB.jacobian(0, 1)};
  const Vec3 j_fd = (1.0 / kNat.mu0) *
                    (curl_b - (1.0 / (kNat.c * kNat.c)) * fdE.time_derivative);
  CHECK(norm_inf(derived_state(wave, p).j - j_fd) < 1e-5);
}

TEST_CASE("nonlinear-system residuals of exact solutions") {
  const EMSolution wave = photon_wave(polarized_profile(1.0, -0.6, 2.0, 0.6, 1.0), kNat);
  Rng rng(42);
  for (int i = 0; i < 80; ++i) {
    const Point4 p = at(rng.box(-0.9, 0.9), rng.uniform(-0.05, 0.05));
    const PointResidual r = residual_system1(wave, p);
    CHECK(norm_inf(r.faraday) <= 1e-11);
    CHECK(std::abs(r.div_b) <= 1e-11);
    CHECK(r.force_normalized <= 1e-11);
    CHECK(r.power_normalized <= 1e-11);
  }
  const EMSolution uk = uk_solution(1.0, kNat);
  const PointResidual r = residual_system1(uk, {1.0, 1.0, 1.0, 0.0});
  CHECK(norm_inf(r.faraday) <= 1e-10);
  CHECK(std::abs(r.div_b) <= 1e-10);
  CHECK(r.force_normalized <= 1e-10);
  CHECK(r.power_normalized <= 1e-10);
}

TEST_CASE("a static irrotational E alone is not force-free") {
  // E = (x, 0, 0), B = 0: rho = eps0 and the force density is eps0 (x, 0, 0)
  EMSolution s;
  s.constants = kNat;
  s.E.value = [](const Point4& p) { return Vec3{p.x, 0.0, 0.0}; };
  s.E.jacobian = [](const Point4&) {
    Mat3 j;
    j(0, 0) = 1.0;
    return j;
  };
  s.E.time_derivative = [](const Point4&) { return Vec3{}; };
  s.B = vector_constant({0, 0, 0});
  const Point4 p{0.8, 0.1, -0.4, 0.0};
  const DerivedState d = derived_state(s, p);
  CHECK(d.rho == Catch::Approx(kNat.eps0));
  CHECK(norm_inf(d.force - Vec3{kNat.eps0 * p.x, 0.0, 0.0}) < 1e-15);
  CHECK(residual_system1(s, p).force_normalized > 0.1);
}

TEST_CASE("linear-system residuals flag the nonlinear-only solutions") {
  const Profile prof = mollifier({0, 0, 0}, 1.0, 1.0);
  const EMSolution wave = photon_wave(prof, kNat);
  const Point4 p{0.3, 0.25, -0.2, 0.0};
  const Mat3 h = prof.a0.hessian(p);
  const double lap_t = h(1, 1) + h(2, 2);
  REQUIRE(std::abs(lap_t) > 0.1);  // pick a point where the violation is visible
  const PointResidual r2 = residual_system2(wave, p);
  CHECK(r2.div_e == Catch::Approx(kNat.c * lap_t).margin(1e-13));
  CHECK(norm_inf(r2.ampere_vacuum) > 0.01);

  const PointResidual rz = residual_system2(zero_solution(), p);
  CHECK(rz.div_e == 0.0);
  CHECK(norm_inf(rz.ampere_vacuum) == 0.0);
}

TEST_CASE("solutions of the linear system satisfy the nonlinear one") {
  // constant background and the far field of the point charge
  const EMSolution bg = constant_background(0.3, -0.7, 0.2, kNat);
  const EMSolution point = uk_solution(0.0, kNat);
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const Point4 p = at(rng.box(2.0, 4.0));
    for (const EMSolution* s : {&bg, &point}) {
      const PointResidual r2 = residual_system2(*s, p);
      if (norm_inf(r2.faraday) < 1e-9 && std::abs(r2.div_b) < 1e-9 &&
          std::abs(r2.div_e) < 1e-9 && norm_inf(r2.ampere_vacuum) < 1e-9) {
        const PointResidual r1 = residual_system1(*s, p);
        CHECK(r1.force_normalized < 1e-9);
        CHECK(r1.power_normalized < 1e-9);
      }
    }
  }
}

TEST_CASE("force and power cancel pointwise for many wave profiles") {
  Rng rng(44);
  for (int k = 0; k < 10; ++k) {
    const Profile prof =
        k % 2 == 0
            ? mollifier(rng.box(-0.2, 0.2), rng.uniform(0.6, 1.2), rng.uniform(0.5, 2.0))
            : polarized_profile(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                rng.uniform(1.0, 4.0), 0.5, 1.0);
    const EMSolution wave = photon_wave(prof, kNat);
    for (int i = 0; i < 100; ++i) {
      const Point4 p = at(rng.box(-1.0, 1.0), rng.uniform(-0.1, 0.1));
      const PointResidual r = residual_system1(wave, p);
      CHECK(r.force_normalized <= 1e-11);
      CHECK(r.power_normalized <= 1e-11);
    }
  }
}

TEST_CASE("residuals scale linearly and quadratically with the field amplitude") {
  // faraday and div_b are linear in the fields, force and power quadratic
  EMSolution rough;  // deliberately NOT a solution
  rough.constants = kNat;
  rough.E.value = [](const Point4& p) { return Vec3{p.y * p.z, p.x, p.x * p.y}; };
  rough.E.jacobian = [](const Point4& p) {
    Mat3 j;
    j(0, 1) = p.z;
    j(0, 2) = p.y;
    j(1, 0) = 1.0;
    j(2, 0) = p.y;
    j(2, 1) = p.x;
    return j;
  };
  rough.E.time_derivative = [](const Point4&) { return Vec3{}; };
  rough.B.value = [](const Point4& p) { return Vec3{p.x, p.z, p.y * p.y}; };
  rough.B.jacobian = [](const Point4& p) {
    Mat3 j;
    j(0, 0) = 1.0;
    j(1, 2) = 1.0;
    j(2, 1) = 2.0 * p.y;
    return j;
  };
  rough.B.time_derivative = [](const Point4&) { return Vec3{}; };

  const double alpha = 3.5;
  const EMSolution scaled = scale(rough, alpha);
  Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    const Point4 p = at(rng.box(-1.0, 1.0));
    const PointResidual r = residual_system1(rough, p);
    const PointResidual rs = residual_system1(scaled, p);
    CHECK(norm_inf(rs.faraday - alpha * r.faraday) <=
          1e-12 * std::max(1.0, norm_inf(r.faraday)));
    CHECK(rs.div_b == Catch::Approx(alpha * r.div_b).margin(1e-12));
    CHECK(norm_inf(rs.force - alpha * alpha * r.force) <=
          1e-11 * std::max(1.0, norm_inf(r.force)));
    CHECK(rs.power == Catch::Approx(alpha * alpha * r.power).margin(1e-11));
  }
}

TEST_CASE("grid sweeps skip singular nodes and reject all-singular grids") {
  const EMSolution uk = uk_solution(1.0, kNat);
  const GridSpec grid({-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}, {9, 9, 9}, 0.0);
  const ResidualReport rep = sup_residuals(uk, grid, 1);
  CHECK(rep.skipped > 0);
  CHECK(rep.samples + rep.skipped == grid.node_count());
  CHECK(rep.sup.force_normalized <= 1e-10);

  const GridSpec inside({-0.05, -0.05, -0.05}, {0.05, 0.05, 0.05}, {3, 3, 3}, 0.0);
  CHECK_THROWS_AS(sup_residuals(uk, inside, 1), std::domain_error);
  CHECK_THROWS_AS(derived_state(uk, {0.0, 0.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(sup_residuals(uk, grid, 3), std::invalid_argument);
}

TEST_CASE("sup residuals of the photon wave over its support") {
  const EMSolution wave = photon_wave(mollifier({0, 0, 0}, 1.0, 1.0), kNat);
  const GridSpec grid({-1.2, -1.2, -1.2}, {1.2, 1.2, 1.2}, {33, 33, 33}, 0.0);
  const ResidualReport r1 = sup_residuals(wave, grid, 1);
  CHECK(r1.sup.faraday <= 1e-10);
  CHECK(r1.sup.div_b <= 1e-10);
  CHECK(r1.sup.force_normalized <= 1e-10);
  CHECK(r1.sup.power_normalized <= 1e-10);
  CHECK(r1.samples == grid.node_count());

  const ResidualReport r2 = sup_residuals(wave, grid, 2);
  // the violation of the linear system equals max |c lap_t a| on the grid
  double expected = 0.0;
  const Profile prof = mollifier({0, 0, 0}, 1.0, 1.0);
  grid.for_each_node([&](const Point4& p) {
    const Mat3 h = prof.a0.hessian(p);
    expected = std::max(expected, std::abs(kNat.c * (h(1, 1) + h(2, 2))));
  });
  CHECK(r2.sup.div_e == Catch::Approx(expected).epsilon(1e-12));
  CHECK(r2.sup.div_e > 0.0);

  const ResidualReport rz = sup_residuals(zero_solution(), grid, 2);
  CHECK(rz.sup.div_e == 0.0);
  CHECK(rz.sup.faraday == 0.0);
}

TEST_CASE("residual report serializes with the fixed field names") {
  const EMSolution wave = photon_wave(mollifier({0, 0, 0}, 1.0, 1.0), kNat);
  const GridSpec grid({-1.2, -1.2, -1.2}, {1.2, 1.2, 1.2}, {9, 9, 9}, 0.0);
  const json j = to_json(sup_residuals(wave, grid, 2));
  CHECK(j.contains("sup"));
  CHECK(j.contains("skipped"));
  for (const char* key : {"faraday", "div_b", "force", "power", "div_e", "ampere_vacuum"})
    CHECK(j["sup"].contains(key));
  CHECK(j["samples"].get<std::size_t>() == grid.node_count());
}
