#pragma once

// JSON serialization of the report documents. Key order is fixed
// everywhere (nlohmann ordered_json) so identical runs produce
// byte-identical output.

#include <json.hpp>

#include "vaclab/conserved.hpp"
#include "vaclab/diagnostics.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/media_suites.hpp"

namespace vaclab {

using json = nlohmann::ordered_json;

[[nodiscard]] inline json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

[[nodiscard]] inline json to_json(const ResidualReport& r) {
  json sup;
  sup["faraday"] = r.sup.faraday;
  sup["div_b"] = r.sup.div_b;
  sup["force"] = r.sup.force;
  sup["force_normalized"] = r.sup.force_normalized;
  sup["power"] = r.sup.power;
  sup["power_normalized"] = r.sup.power_normalized;
  if (r.system == 2) {
    sup["div_e"] = r.sup.div_e;
    sup["ampere_vacuum"] = r.sup.ampere_vacuum;
  }
  json out;
  out["system"] = r.system;
  out["sup"] = sup;
  out["samples"] = r.samples;
  out["skipped"] = r.skipped;
  return out;
}

[[nodiscard]] inline json to_json(const ConservedReport& r) {
  json out;
  out["total_charge"] = r.total_charge;
  out["total_energy"] = r.total_energy;
  out["momentum"] = to_json(r.momentum);
  out["dispersion_gap"] = r.dispersion_gap;
  out["cells"] = r.cells;
  out["estimated_error"] = r.error_estimate;
  return out;
}

[[nodiscard]] inline json to_json(const MediaSuiteResult& r) {
  json out;
  out["name"] = r.name;
  out["cases"] = r.cases;
  out["failures"] = r.failures;
  out["max_deviation"] = r.max_deviation;
  out["tolerance"] = r.tolerance;
  out["pass"] = r.pass();
  return out;
}

}  // namespace vaclab
