// vaclab command-line front end.
//
// Subcommands:
//   verify      run the checks listed in a scenario config
//   sweep       per-resolution convergence table for one quantity
//   plot-data   columnar samples of a pointwise quantity along an axis
//   media-check randomized interacting-media suites, no config needed
//
// Exit codes: 0 success, 1 check failure, 2 config parse error,
// 3 config validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vaclab/scenario.hpp"
#include "vaclab/vaclab.hpp"

namespace {

using vaclab::json;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void write_output(const CommonOpts& opts, const json& doc) {
  const std::string text =
      opts.format == "csv" ? vaclab::report_to_csv(doc) : doc.dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
  out << text;
}

vaclab::Scenario load_scenario(const CommonOpts& opts, bool require_checks) {
  json doc = vaclab::load_config(opts.config_path);
  if (opts.seed_set) {
    if (!doc.is_object()) throw vaclab::ValidationError("config: expected an object");
    doc["seed"] = opts.seed;
  }
  return vaclab::parse_scenario(doc, require_checks);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
  if (needs_config)
    cmd->add_option("--config", opts.config_path, "scenario config file")->required();
  cmd->add_option("--out", opts.out_path, "write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "override the scenario seed")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vaclab: residuals, conserved quantities and interacting-media checks "
               "for closed-form electromagnetic solution families"};
  app.require_subcommand(1);

  CommonOpts verify_opts, sweep_opts, plot_opts, media_opts;

  CLI::App* verify = app.add_subcommand("verify", "run the checks of a scenario config");
  add_common(verify, verify_opts, true);

  CLI::App* sweep = app.add_subcommand("sweep", "convergence sweep over resolutions");
  add_common(sweep, sweep_opts, true);

  CLI::App* plot = app.add_subcommand("plot-data", "emit columnar plot samples");
  add_common(plot, plot_opts, true);

  CLI::App* media = app.add_subcommand("media-check", "randomized interacting-media suites");
  int media_cases = 1000;
  double media_cap = 0.99;
  media->add_option("--cases", media_cases, "random cases per suite");
  media->add_option("--velocity-cap", media_cap, "max speed as a fraction of c");
  add_common(media, media_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      const vaclab::Scenario sc = load_scenario(verify_opts, true);
      const vaclab::RunResult res = vaclab::run_scenario(sc);
      write_output(verify_opts, res.report);
      return res.all_passed ? 0 : 1;
    }
    if (sweep->parsed()) {
      const vaclab::Scenario sc = load_scenario(sweep_opts, false);
      write_output(sweep_opts, vaclab::convergence_sweep(sc));
      return 0;
    }
    if (plot->parsed()) {
      const vaclab::Scenario sc = load_scenario(plot_opts, false);
      if (plot_opts.out_path.empty()) {
        vaclab::emit_plot_data(sc, std::cout);
      } else {
        std::ofstream out(plot_opts.out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + plot_opts.out_path);
        vaclab::emit_plot_data(sc, out);
      }
      return 0;
    }
    // media-check
    vaclab::MediaSuiteConfig cfg;
    cfg.seed = media_opts.seed_set ? media_opts.seed : 1;
    cfg.cases = media_cases;
    cfg.velocity_cap = media_cap;
    if (cfg.cases < 1) throw vaclab::ValidationError("--cases must be positive");
    if (!(cfg.velocity_cap > 0.0 && cfg.velocity_cap < 1.0))
      throw vaclab::ValidationError("--velocity-cap must lie in (0, 1)");
    const auto suites = vaclab::run_media_suites(cfg, vaclab::PhysicalConstants::natural());
    json rep;
    rep["artifact"] = {{"name", "vaclab"}, {"version", vaclab::kVersion}};
    rep["seed"] = cfg.seed;
    rep["cases"] = cfg.cases;
    rep["velocity_cap"] = cfg.velocity_cap;
    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
      arr.push_back(vaclab::to_json(s));
      all = all && s.pass();
    }
    rep["suites"] = arr;
    rep["all_passed"] = all;
    write_output(media_opts, rep);
    return all ? 0 : 1;
  } catch (const vaclab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const vaclab::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
