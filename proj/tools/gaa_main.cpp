// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: threshold, roc, sweep, estimate-demo.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gaa/experiments.hpp"
#include "gaa/scenario.hpp"
#include "gaa/version.hpp"

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::optional<double> grid_step;
  std::optional<int> threads;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "scenario file (key = value lines)")
      ->required();
  cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
  cmd->add_option("--seed", opts.seed, "override the scenario seed");
  cmd->add_option("--trials", opts.trials, "override the scenario trial count");
  cmd->add_option("--grid-step", opts.grid_step, "override the direction grid step");
  cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
}

gaa::Scenario load(const CommonOpts& opts) {
  gaa::Scenario sc = gaa::load_scenario(opts.scenario_path);
  if (opts.seed) sc.seed = *opts.seed;
  if (opts.trials) sc.trials = *opts.trials;
  if (opts.grid_step) sc.grid_step = *opts.grid_step;
  if (opts.threads) sc.threads = *opts.threads;
  sc.validate();
  return sc;
}

int run(const CommonOpts& opts, const std::function<void(const gaa::Scenario&, std::ostream&)>& fn) {
  const gaa::Scenario sc = load(opts);
  if (opts.out_path.empty()) {
    fn(sc, std::cout);
    return 0;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opts.out_path << "'\n";
    return 1;
  }
  fn(sc, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Physical-layer authentication of UAV control packets"};
  app.set_version_flag("--version", gaa::kVersion);
  app.require_subcommand(1);

  CommonOpts threshold_opts, roc_opts, sweep_opts, demo_opts;
  std::string sweep_var;

  CLI::App* threshold = app.add_subcommand("threshold", "Neyman-Pearson thresholds per eta");
  add_common(threshold, threshold_opts);

  CLI::App* roc = app.add_subcommand("roc", "analytic and empirical FAR/SDR over a tau sweep");
  add_common(roc, roc_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "SDR at fixed FAR while one attacker parameter sweeps");
  add_common(sweep, sweep_opts);
  sweep->add_option("--var", sweep_var, "sweep variable")
      ->required()
      ->check(CLI::IsMember({"theta1", "phi1", "lambda1_sq", "p1"}));

  CLI::App* demo = app.add_subcommand("estimate-demo", "true vs estimated parameters for one draw");
  add_common(demo, demo_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (threshold->parsed()) return run(threshold_opts, gaa::run_threshold);
    if (roc->parsed()) return run(roc_opts, gaa::run_roc);
    if (sweep->parsed()) {
      return run(sweep_opts, [&](const gaa::Scenario& sc, std::ostream& out) {
        gaa::run_sweep(sc, sweep_var, out);
      });
    }
    if (demo->parsed()) return run(demo_opts, gaa::run_estimate_demo);
  } catch (const gaa::ScenarioError& e) {
    std::cerr << "error: scenario line " << e.line() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
