#pragma once

// Scenario configuration, execution and reporting. Configs are JSON
// documents with a closed schema: unknown keys are rejected rather than
// ignored, so a typo cannot silently change what a run verifies.
//
// Error model: malformed JSON raises ParseError (CLI exit 2); every
// schema or semantic problem raises ValidationError (exit 3); a check
// that runs but misses its tolerance only affects the exit code (1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vaclab/axisym.hpp"
#include "vaclab/conserved.hpp"
#include "vaclab/diagnostics.hpp"
#include "vaclab/fd_oracle.hpp"
#include "vaclab/media_suites.hpp"
#include "vaclab/profiles.hpp"
#include "vaclab/random.hpp"
#include "vaclab/report.hpp"
#include "vaclab/solutions.hpp"

namespace vaclab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cfg {

inline void expect_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ValidationError(ctx + ": expected an object");
}

inline void expect_keys(const json& obj, std::initializer_list<const char*> allowed,
                        const std::string& ctx) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) throw ValidationError(ctx + ": unknown key '" + key + "'");
  }
}

inline const json& require(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(ctx + ": missing key '" + key + "'");
  return *it;
}

inline double number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ValidationError(ctx + ": expected a number");
  return j.get<double>();
}

inline double number(const json& obj, const char* key, const std::string& ctx) {
  return number(require(obj, key, ctx), ctx + "." + key);
}

inline double number_or(const json& obj, const char* key, double def, const std::string& ctx) {
  auto it = obj.find(key);
  return it == obj.end() ? def : number(*it, ctx + "." + key);
}

inline std::string text(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ValidationError(ctx + ": expected a string");
  return j.get<std::string>();
}

inline Vec3 vec3(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 3) throw ValidationError(ctx + ": expected [x, y, z]");
  return {number(j[0], ctx), number(j[1], ctx), number(j[2], ctx)};
}

}  // namespace cfg

[[nodiscard]] inline json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
}

[[nodiscard]] inline Func1 build_func1(const json& j, const std::string& ctx) {
  cfg::expect_object(j, ctx);
  const std::string type = cfg::text(cfg::require(j, "type", ctx), ctx + ".type");
  if (type == "poly") {
    cfg::expect_keys(j, {"type", "coeffs"}, ctx);
    const json& c = cfg::require(j, "coeffs", ctx);
    if (!c.is_array() || c.empty()) throw ValidationError(ctx + ".coeffs: expected an array");
    std::vector<double> coeffs;
    for (const auto& v : c) coeffs.push_back(cfg::number(v, ctx + ".coeffs"));
    return func1_poly(coeffs);
  }
  if (type == "exp") {
    cfg::expect_keys(j, {"type", "amplitude", "rate"}, ctx);
    return func1_exp(cfg::number(j, "amplitude", ctx), cfg::number(j, "rate", ctx));
  }
  if (type == "gaussian") {
    cfg::expect_keys(j, {"type", "amplitude", "center", "width"}, ctx);
    return func1_gaussian(cfg::number(j, "amplitude", ctx), cfg::number(j, "center", ctx),
                          cfg::number(j, "width", ctx));
  }
  if (type == "sin") {
    cfg::expect_keys(j, {"type", "amplitude", "frequency", "phase"}, ctx);
    return func1_sin(cfg::number(j, "amplitude", ctx), cfg::number(j, "frequency", ctx),
                     cfg::number_or(j, "phase", 0.0, ctx));
  }
  throw ValidationError(ctx + ": unknown one-variable function type '" + type + "'");
}

[[nodiscard]] inline Axis parse_axis(const json& j, const std::string& ctx) {
  const std::string a = cfg::text(j, ctx);
  if (a == "x") return Axis::X;
  if (a == "y") return Axis::Y;
  if (a == "z") return Axis::Z;
  throw ValidationError(ctx + ": travel_axis must be x, y or z");
}

[[nodiscard]] inline EMSolution build_solution(const json& j,
                                               const PhysicalConstants& constants,
                                               const std::string& ctx) {
  cfg::expect_object(j, ctx);
  const std::string family = cfg::text(cfg::require(j, "family", ctx), ctx + ".family");

  EMSolution sol = [&]() -> EMSolution {
    if (family == "photon_mollifier") {
      cfg::expect_keys(j, {"family", "center", "radius", "amplitude", "travel_axis",
                           "translate", "scale"}, ctx);
      const Vec3 center = cfg::vec3(cfg::require(j, "center", ctx), ctx + ".center");
      const Profile prof = mollifier(center, cfg::number(j, "radius", ctx),
                                     cfg::number(j, "amplitude", ctx));
      const Axis axis = j.contains("travel_axis")
                            ? parse_axis(j["travel_axis"], ctx + ".travel_axis")
                            : Axis::X;
      return photon_wave(prof, constants, axis);
    }
    if (family == "photon_polarized") {
      cfg::expect_keys(j, {"family", "amp_a", "amp_b", "omega", "inner_radius", "outer_radius",
                           "travel_axis", "translate", "scale"}, ctx);
      const Profile prof = polarized_profile(
          cfg::number(j, "amp_a", ctx), cfg::number(j, "amp_b", ctx),
          cfg::number(j, "omega", ctx), cfg::number(j, "inner_radius", ctx),
          cfg::number(j, "outer_radius", ctx));
      const Axis axis = j.contains("travel_axis")
                            ? parse_axis(j["travel_axis"], ctx + ".travel_axis")
                            : Axis::X;
      return photon_wave(prof, constants, axis);
    }
    if (family == "uk") {
      cfg::expect_keys(j, {"family", "k", "translate", "scale"}, ctx);
      return uk_solution(cfg::number(j, "k", ctx), constants);
    }
    if (family == "stationary_pair") {
      cfg::expect_keys(j, {"family", "psi", "translate", "scale"}, ctx);
      return stationary_pair_solution(build_func1(cfg::require(j, "psi", ctx), ctx + ".psi"),
                                      constants);
    }
    if (family == "constant_background") {
      cfg::expect_keys(j, {"family", "h", "translate", "scale"}, ctx);
      const Vec3 h = cfg::vec3(cfg::require(j, "h", ctx), ctx + ".h");
      return constant_background(h.x, h.y, h.z, constants);
    }
    if (family == "superpose") {
      cfg::expect_keys(j, {"family", "parts", "translate", "scale"}, ctx);
      const json& parts = cfg::require(j, "parts", ctx);
      if (!parts.is_array() || parts.size() < 2)
        throw ValidationError(ctx + ".parts: expected an array of at least two solutions");
      EMSolution acc = build_solution(parts[0], constants, ctx + ".parts[0]");
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = superpose(acc, build_solution(parts[i], constants,
                                            ctx + ".parts[" + std::to_string(i) + "]"));
      return acc;
    }
    throw ValidationError(ctx + ": unknown solution family '" + family + "'");
  }();

  if (j.contains("translate"))
    sol = translate(sol, cfg::vec3(j["translate"], ctx + ".translate"));
  if (j.contains("scale")) sol = scale(sol, cfg::number(j, "scale", ctx));
  return sol;
}

[[nodiscard]] inline GridSpec build_grid(const json& j, const std::string& ctx) {
  cfg::expect_object(j, ctx);
  cfg::expect_keys(j, {"lower", "upper", "points", "time"}, ctx);
  const Vec3 lo = cfg::vec3(cfg::require(j, "lower", ctx), ctx + ".lower");
  const Vec3 hi = cfg::vec3(cfg::require(j, "upper", ctx), ctx + ".upper");
  const json& pts = cfg::require(j, "points", ctx);
  if (!pts.is_array() || pts.size() != 3)
    throw ValidationError(ctx + ".points: expected [nx, ny, nz]");
  std::array<int, 3> n{};
  for (int i = 0; i < 3; ++i) {
    const double v = cfg::number(pts[static_cast<std::size_t>(i)], ctx + ".points");
    n[static_cast<std::size_t>(i)] = static_cast<int>(v);
    if (n[static_cast<std::size_t>(i)] != v)
      throw ValidationError(ctx + ".points: entries must be integers");
  }
  try {
    return GridSpec(lo, hi, n, cfg::number_or(j, "time", 0.0, ctx));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(ctx + ": " + e.what());
  }
}

struct Scenario {
  json config;  // the parsed document, echoed into reports
  std::string label;
  std::uint64_t seed = 0;
  PhysicalConstants constants = PhysicalConstants::natural();
  std::optional<GridSpec> grid;
  json solution_spec;  // built lazily; scenarios for media checks have none
  std::vector<json> checks;
  json sweep_spec;
  json plot_spec;
};

[[nodiscard]] inline Scenario parse_scenario(const json& doc, bool require_checks) {
  cfg::expect_object(doc, "config");
  cfg::expect_keys(doc, {"label", "seed", "constants", "solution", "grid", "checks", "sweep",
                         "plot"}, "config");
  Scenario sc;
  sc.config = doc;
  if (doc.contains("label")) sc.label = cfg::text(doc["label"], "config.label");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw ValidationError("config.seed: expected an unsigned integer");
    sc.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("constants")) {
    const std::string c = cfg::text(doc["constants"], "config.constants");
    if (c == "natural")
      sc.constants = PhysicalConstants::natural();
    else if (c == "si")
      sc.constants = PhysicalConstants::si();
    else
      throw ValidationError("config.constants: expected 'natural' or 'si'");
  }
  if (doc.contains("grid")) sc.grid = build_grid(doc["grid"], "config.grid");
  if (doc.contains("solution")) sc.solution_spec = doc["solution"];
  if (doc.contains("sweep")) sc.sweep_spec = doc["sweep"];
  if (doc.contains("plot")) sc.plot_spec = doc["plot"];
  if (doc.contains("checks")) {
    if (!doc["checks"].is_array())
      throw ValidationError("config.checks: expected an array");
    for (const auto& c : doc["checks"]) sc.checks.push_back(c);
  }
  if (require_checks && sc.checks.empty())
    throw ValidationError("config.checks: at least one check is required");
  return sc;
}

namespace detail {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  json values;
};

inline CheckOutcome run_system_check(const Scenario& sc, const EMSolution& sol, int system,
                                     const json& spec, const std::string& ctx) {
  cfg::expect_keys(spec, {"type", "tolerance"}, ctx);
  const double tol = cfg::number_or(spec, "tolerance", 1e-10, ctx);
  if (!(tol > 0.0)) throw ValidationError(ctx + ".tolerance: must be positive");
  if (!sc.grid) throw ValidationError("config.grid: required by system checks");
  CheckOutcome out;
  out.name = system == 1 ? "system1" : "system2";
  const ResidualReport rep = sup_residuals(sol, *sc.grid, system);
  bool pass = rep.sup.faraday <= tol && rep.sup.div_b <= tol &&
              rep.sup.force_normalized <= tol && rep.sup.power_normalized <= tol;
  if (system == 2) pass = pass && rep.sup.div_e <= tol && rep.sup.ampere_vacuum <= tol;
  out.pass = pass;
  out.values = to_json(rep);
  out.values["tolerance"] = tol;
  return out;
}

inline CheckOutcome run_conserved_check(const Scenario& sc, const EMSolution& sol,
                                        const json& spec, const std::string& ctx) {
  cfg::expect_keys(spec, {"type", "charge_tolerance", "dispersion_tolerance"}, ctx);
  const double qtol = cfg::number_or(spec, "charge_tolerance", 1e-8, ctx);
  const double dtol = cfg::number_or(spec, "dispersion_tolerance", 1e-8, ctx);
  if (!(qtol > 0.0) || !(dtol > 0.0))
    throw ValidationError(ctx + ": tolerances must be positive");
  if (!sc.grid) throw ValidationError("config.grid: required by the conserved check");
  CheckOutcome out;
  out.name = "conserved";
  try {
    const ConservedReport rep = energy_momentum(sol, *sc.grid);
    const IntegralResult abs_rho = integrate_box(
        [&sol](const Point4& p) {
          return std::abs(sol.constants.eps0 * sol.E.jacobian(p).trace());
        },
        *sc.grid);
    out.values = to_json(rep);
    out.values["abs_charge_integral"] = abs_rho.value;
    const bool charge_ok = std::abs(rep.total_charge) <= qtol * std::max(abs_rho.value, 1e-300);
    const bool disp_ok =
        std::abs(rep.dispersion_gap) <= dtol * std::max(rep.total_energy, 1e-300);
    out.values["charge_pass"] = charge_ok;
    out.values["dispersion_pass"] = disp_ok;
    out.pass = charge_ok && disp_ok;
  } catch (const std::domain_error& e) {
    out.pass = false;
    out.values["error"] = e.what();
  }
  return out;
}

inline CheckOutcome run_axisym_check(const Scenario& sc, const json& spec,
                                     const std::string& ctx) {
  cfg::expect_keys(spec, {"type", "tolerance", "k_values", "points"}, ctx);
  const double tol = cfg::number_or(spec, "tolerance", 1e-10, ctx);
  if (!(tol > 0.0)) throw ValidationError(ctx + ".tolerance: must be positive");
  std::vector<double> ks{-1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  if (spec.contains("k_values")) {
    ks.clear();
    for (const auto& v : spec["k_values"]) ks.push_back(cfg::number(v, ctx + ".k_values"));
    if (ks.empty()) throw ValidationError(ctx + ".k_values: must not be empty");
  }
  const int npts = static_cast<int>(cfg::number_or(spec, "points", 200, ctx));
  if (npts < 1) throw ValidationError(ctx + ".points: must be positive");

  CheckOutcome out;
  out.name = "axisym";
  Rng rng(sc.seed ^ 0xa15ull);
  double max_eigen = 0.0;
  for (double k : ks)
    for (int i = 0; i < npts; ++i) {
      double s = rng.uniform(0.01, 2.0), z = rng.uniform(-2.0, 2.0);
      while (s + z * z < 0.09) {  // stay clear of the singular origin
        s = rng.uniform(0.01, 2.0);
        z = rng.uniform(-2.0, 2.0);
      }
      max_eigen = std::max(max_eigen, std::abs(uk_identity_residual(k, AxiPoint(s, z))));
    }

  double max_stationary = 0.0;
  const Func1 psis[] = {func1_poly({0.0, 0.0, 1.0}), func1_exp(1.0, -1.0),
                        func1_sin(0.5, 1.0) + func1_linear(2.0)};
  for (const Func1& psi : psis) {
    const auto [psi_cf, g_cf] = canonical_stationary_pair(psi, sc.constants);
    for (int i = 0; i <= 12; ++i)
      for (int jz = 0; jz <= 8; ++jz) {
        const AxiPoint p(0.1 + 1.9 * i / 12.0, -1.0 + 2.0 * jz / 8.0);
        const auto r = stationary_pair_residual(psi_cf, g_cf, p, sc.constants);
        max_stationary = std::max({max_stationary, std::abs(r[0]), std::abs(r[1])});
      }
  }

  out.values["max_uk_identity_residual"] = max_eigen;
  out.values["max_stationary_pair_residual"] = max_stationary;
  out.values["tolerance"] = tol;
  out.pass = max_eigen <= tol && max_stationary <= tol;
  return out;
}

inline CheckOutcome run_media_check(const Scenario& sc, const json& spec,
                                    const std::string& ctx) {
  cfg::expect_keys(spec, {"type", "cases", "velocity_cap"}, ctx);
  MediaSuiteConfig cfg_;
  cfg_.seed = sc.seed;
  cfg_.cases = static_cast<int>(cfg::number_or(spec, "cases", 1000, ctx));
  cfg_.velocity_cap = cfg::number_or(spec, "velocity_cap", 0.99, ctx);
  if (cfg_.cases < 1) throw ValidationError(ctx + ".cases: must be positive");
  if (!(cfg_.velocity_cap > 0.0 && cfg_.velocity_cap < 1.0))
    throw ValidationError(ctx + ".velocity_cap: must lie in (0, 1)");
  CheckOutcome out;
  out.name = "media";
  bool pass = true;
  json suites = json::array();
  for (const MediaSuiteResult& r : run_media_suites(cfg_, sc.constants)) {
    suites.push_back(to_json(r));
    pass = pass && r.pass();
  }
  out.values["suites"] = suites;
  out.pass = pass;
  return out;
}

}  // namespace detail

struct RunResult {
  json report;
  bool all_passed = false;
};

/// Execute every requested check in declaration order and assemble the
/// report document. Timings are the only nondeterministic content.
[[nodiscard]] inline RunResult run_scenario(const Scenario& sc) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<EMSolution> sol;
  auto solution = [&]() -> const EMSolution& {
    if (!sol) {
      if (sc.solution_spec.is_null())
        throw ValidationError("config.solution: required by the requested checks");
      sol = build_solution(sc.solution_spec, sc.constants, "config.solution");
    }
    return *sol;
  };

  RunResult out;
  json results = json::array();
  bool all = true;
  for (std::size_t i = 0; i < sc.checks.size(); ++i) {
    const json& c = sc.checks[i];
    const std::string ctx = "config.checks[" + std::to_string(i) + "]";
    cfg::expect_object(c, ctx);
    const std::string type = cfg::text(cfg::require(c, "type", ctx), ctx + ".type");
    detail::CheckOutcome oc;
    if (type == "system1")
      oc = detail::run_system_check(sc, solution(), 1, c, ctx);
    else if (type == "system2")
      oc = detail::run_system_check(sc, solution(), 2, c, ctx);
    else if (type == "conserved")
      oc = detail::run_conserved_check(sc, solution(), c, ctx);
    else if (type == "axisym")
      oc = detail::run_axisym_check(sc, c, ctx);
    else if (type == "media")
      oc = detail::run_media_check(sc, c, ctx);
    else
      throw ValidationError(ctx + ": unknown check type '" + type + "'");
    json item;
    item["check"] = oc.name;
    item["pass"] = oc.pass;
    item["values"] = oc.values;
    results.push_back(item);
    all = all && oc.pass;
  }

  const auto t1 = std::chrono::steady_clock::now();
  json rep;
  rep["artifact"] = {{"name", "vaclab"}, {"version", "0.1.0"}};
  rep["scenario"] = sc.config;
  rep["results"] = results;
  rep["all_passed"] = all;
  rep["timings"] = {
      {"total_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
  out.report = rep;
  out.all_passed = all;
  return out;
}

/// Per-resolution values of a quantity plus a fitted convergence order.
[[nodiscard]] inline json convergence_sweep(const Scenario& sc) {
  const json& spec = sc.sweep_spec;
  if (spec.is_null()) throw ValidationError("config.sweep: required by the sweep command");
  cfg::expect_object(spec, "config.sweep");
  cfg::expect_keys(spec, {"quantity", "resolutions"}, "config.sweep");
  const std::string quantity =
      cfg::text(cfg::require(spec, "quantity", "config.sweep"), "config.sweep.quantity");
  const json& res = cfg::require(spec, "resolutions", "config.sweep");
  if (!res.is_array() || res.size() < 3)
    throw ValidationError("config.sweep.resolutions: need at least 3 resolutions");
  std::vector<int> ns;
  for (const auto& v : res) {
    const double d = cfg::number(v, "config.sweep.resolutions");
    if (d < 3 || d != std::floor(d))
      throw ValidationError("config.sweep.resolutions: entries must be integers >= 3");
    ns.push_back(static_cast<int>(d));
  }
  if (!sc.grid) throw ValidationError("config.grid: required by the sweep command");
  const EMSolution sol = build_solution(sc.solution_spec, sc.constants, "config.solution");

  std::vector<double> hs, values;
  json rows = json::array();
  if (quantity == "fd_error") {
    // max discrepancy between analytic and finite-difference E-field
    // jacobians at seeded sample points; step h = 1/resolution
    Rng rng(sc.seed ^ 0xfdull);
    std::vector<Point4> pts;
    while (pts.size() < 24) {
      const Vec3 r = rng.box(-0.6, 0.6);
      const Point4 p = at(r, sc.grid->time);
      if (!sol.singular.contains(p)) pts.push_back(p);
    }
    for (int n : ns) {
      const double h = 1.0 / n;
      double worst = 0.0;
      for (const Point4& p : pts) {
        const FdVector fd = fd_vector(sol.E, p, h);
        double dev = max_abs(sol.E.jacobian(p) + (-1.0 * fd.jacobian));
        dev = std::max(dev, norm_inf(sol.E.time_derivative(p) - fd.time_derivative));
        worst = std::max(worst, dev);
      }
      hs.push_back(h);
      values.push_back(worst);
      rows.push_back({{"resolution", n}, {"value", worst}});
    }
  } else if (quantity == "total_charge" || quantity == "total_energy") {
    for (int n : ns) {
      GridSpec g(sc.grid->lower, sc.grid->upper, {n, n, n}, sc.grid->time);
      double v = 0.0, err = 0.0;
      if (quantity == "total_charge") {
        const IntegralResult q = total_charge(sol, g);
        v = q.value;
        err = q.error_estimate;
      } else {
        // box energy: fields that fill the box are legitimate here
        const ConservedReport r = energy_momentum(sol, g, Quadrature::Midpoint, false);
        v = r.total_energy;
        err = r.error_estimate;
      }
      hs.push_back(1.0 / n);
      values.push_back(v);
      rows.push_back({{"resolution", n}, {"value", v}, {"error_estimate", err}});
    }
  } else {
    throw ValidationError("config.sweep.quantity: unknown quantity '" + quantity + "'");
  }

  // fitted order: for charge the exact value is 0, so |value| is the
  // error; for energy, differences against the finest resolution
  std::vector<double> errs;
  if (quantity == "total_energy") {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      errs.push_back(std::abs(values[i] - values.back()));
    const double order = fit_order(std::vector<double>(hs.begin(), hs.end() - 1), errs);
    json out;
    out["quantity"] = quantity;
    out["rows"] = rows;
    if (std::isfinite(order)) out["order"] = order;
    return out;
  }
  for (double v : values) errs.push_back(std::abs(v));
  const double order = fit_order(hs, errs);
  json out;
  out["quantity"] = quantity;
  out["rows"] = rows;
  if (std::isfinite(order)) out["order"] = order;
  return out;
}

/// Columnar samples of a pointwise quantity along a coordinate axis.
inline void emit_plot_data(const Scenario& sc, std::ostream& os) {
  const json& spec = sc.plot_spec;
  if (spec.is_null()) throw ValidationError("config.plot: required by the plot-data command");
  cfg::expect_object(spec, "config.plot");
  cfg::expect_keys(spec, {"quantity", "axis", "from", "to", "samples", "through", "time"},
                   "config.plot");
  const std::string quantity =
      cfg::text(cfg::require(spec, "quantity", "config.plot"), "config.plot.quantity");
  const std::string axis =
      cfg::text(cfg::require(spec, "axis", "config.plot"), "config.plot.axis");
  if (axis != "x" && axis != "y" && axis != "z")
    throw ValidationError("config.plot.axis: must be x, y or z");
  const double from = cfg::number(spec, "from", "config.plot");
  const double to = cfg::number(spec, "to", "config.plot");
  const int samples = static_cast<int>(cfg::number(spec, "samples", "config.plot"));
  if (samples < 2) throw ValidationError("config.plot.samples: need at least 2");
  Vec3 through;
  if (spec.contains("through")) through = cfg::vec3(spec["through"], "config.plot.through");
  const double time = cfg::number_or(spec, "time", 0.0, "config.plot");

  const bool known = quantity == "abs_e" || quantity == "abs_b" ||
                     quantity == "energy_density" || quantity == "momentum_abs" ||
                     quantity == "div_e" || quantity == "rho" || quantity == "power";
  if (!known)
    throw ValidationError("config.plot.quantity: unknown quantity '" + quantity + "'");

  const EMSolution sol = build_solution(sc.solution_spec, sc.constants, "config.solution");

  auto evaluate = [&](const Point4& p) -> double {
    if (quantity == "abs_e") return norm(sol.E.value(p));
    if (quantity == "abs_b") return norm(sol.B.value(p));
    if (quantity == "energy_density") return energy_density(sol, p);
    if (quantity == "momentum_abs") return norm(momentum_density(sol, p));
    if (quantity == "div_e") return div(sol.E, p);
    if (quantity == "rho") return derived_state(sol, p).rho;
    return derived_state(sol, p).power;
  };

  char line[80];
  for (int i = 0; i < samples; ++i) {
    const double coord = from + (to - from) * i / (samples - 1);
    Point4 p = at(through, time);
    if (axis == "x") p.x = coord;
    if (axis == "y") p.y = coord;
    if (axis == "z") p.z = coord;
    double v;
    if (sol.singular.contains(p)) {
      v = std::numeric_limits<double>::quiet_NaN();
    } else {
      v = evaluate(p);
    }
    std::snprintf(line, sizeof line, "%.17g %.17g\n", coord, v);
    os << line;
  }
}

/// Flatten a report into "path,value" CSV lines (timings included last,
/// like in the JSON form).
[[nodiscard]] inline std::string report_to_csv(const json& report) {
  const json flat = report.flatten();
  std::ostringstream os;
  os << "path,value\n";
  for (const auto& [key, value] : flat.items())
    os << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

}  // namespace vaclab
