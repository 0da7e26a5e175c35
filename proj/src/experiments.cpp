// SPDX-License-Identifier: Apache-2.0

#include "gaa/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "gaa/version.hpp"

namespace gaa {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_metadata(const Scenario& sc, const char* command, std::ostream& out) {
  out << "# gaa " << command << " version=" << kVersion << "\n";
  out << "# seed=" << sc.seed << " grid_step=" << fmt(sc.grid_step)
      << " trials=" << sc.trials << " m_half=" << sc.m_half << " n_y=" << sc.n_y
      << " sigma_sq=" << fmt(sc.sigma_sq) << " k_split=" << sc.k_split << "\n";
}

TrialConfig base_config(const Scenario& sc, Hypothesis hyp) {
  TrialConfig cfg;
  cfg.n_trials = sc.trials;
  cfg.master_seed = sc.seed;
  cfg.hypothesis = hyp;
  cfg.geom = sc.geometry();
  cfg.gcs = sc.knowledge();
  cfg.grid = sc.grid();
  cfg.noise = sc.noise();
  cfg.n_threads = sc.threads;
  if (hyp == Hypothesis::H1) {
    cfg.ma_profile = sc.ma_profile();
    cfg.psi = sc.psi;
  }
  return cfg;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return v;
}

}  // namespace

void run_threshold(const Scenario& sc, std::ostream& out) {
  write_metadata(sc, "threshold", out);
  out << "eta,tau\n";
  const FarModel model = sc.far_model();
  for (double eta : sc.eta_list) {
    out << fmt(eta) << ',' << fmt(far_threshold(eta, model)) << "\n";
  }
}

void run_roc(const Scenario& sc, std::ostream& out) {
  write_metadata(sc, "roc", out);
  const FarModel fm = sc.far_model();
  const SdrModel sm =
      build_sdr_model(sc.knowledge(), sc.ma_profile(), sc.psi, sc.sigma_sq, sc.geometry());

  // default sweep covers FAR from 0.95 down to 0.002
  const double lo = sc.tau_min ? *sc.tau_min : far_threshold(0.95, fm);
  const double hi = sc.tau_max ? *sc.tau_max : far_threshold(0.002, fm);
  if (!(hi > lo)) throw std::invalid_argument("run_roc: need tau_max > tau_min");
  const std::vector<double> taus = linspace(lo, hi, sc.tau_count);

  std::vector<std::pair<double, double>> empirical;
  if (sc.trials > 0) {
    empirical = roc_curve(base_config(sc, Hypothesis::H0), base_config(sc, Hypothesis::H1), taus);
  }

  out << "tau,far_analytic,far_empirical,sdr_analytic,sdr_empirical\n";
  for (size_t i = 0; i < taus.size(); ++i) {
    const double tau = taus[i];
    out << fmt(tau) << ',' << fmt(1.0 - far_cdf(tau, fm)) << ',';
    if (sc.trials > 0) out << fmt(empirical[i].first);
    out << ',' << fmt(sdr_ccdf(tau, sm).value) << ',';
    if (sc.trials > 0) out << fmt(empirical[i].second);
    out << "\n";
  }
}

void run_sweep(const Scenario& sc, const std::string& var, std::ostream& out) {
  double lo = 0.0, hi = 0.0;
  std::string column;
  if (var == "theta1") {
    lo = 5.0;
    hi = 25.0;
    column = "theta1_deg";
  } else if (var == "phi1") {
    lo = 20.0;
    hi = 40.0;
    column = "phi1_deg";
  } else if (var == "lambda1_sq") {
    lo = 0.6;
    hi = 1.0;
    column = "lambda1_sq";
  } else if (var == "p1") {
    lo = 14.0;
    hi = 26.0;
    column = "p1_dbm";
  } else {
    throw std::invalid_argument("run_sweep: unknown sweep variable '" + var +
                                "' (use theta1, phi1, lambda1_sq, p1)");
  }
  if (sc.sweep_min) lo = *sc.sweep_min;
  if (sc.sweep_max) hi = *sc.sweep_max;

  write_metadata(sc, "sweep", out);
  const FarModel fm = sc.far_model();
  std::vector<double> thresholds;
  thresholds.reserve(sc.eta_list.size());
  for (double eta : sc.eta_list) thresholds.push_back(far_threshold(eta, fm));

  out << column;
  for (double eta : sc.eta_list) out << ",sdr_emp_eta" << fmt(eta);
  for (double eta : sc.eta_list) out << ",sdr_ana_eta" << fmt(eta);
  out << "\n";

  for (double value : linspace(lo, hi, sc.sweep_count)) {
    Scenario point = sc;
    if (var == "theta1") {
      point.theta1 = value / kRadToDeg;
    } else if (var == "phi1") {
      point.phi1 = value / kRadToDeg;
    } else if (var == "lambda1_sq") {
      point.lambda1_sq = value;
    } else {
      point.p1_mw = dbm_to_mw(value);
    }
    const TrialStats stats = trial_statistics(base_config(point, Hypothesis::H1));
    const SdrModel sm = build_sdr_model(point.knowledge(), point.ma_profile(), point.psi,
                                        point.sigma_sq, point.geometry());
    out << fmt(value);
    for (double tau : thresholds) {
      out << ',' << fmt(exceedance_rate(stats.statistic, tau).rate);
    }
    for (double tau : thresholds) {
      out << ',' << fmt(sdr_ccdf(tau, sm).value);
    }
    out << "\n";
  }
}

void run_estimate_demo(const Scenario& sc, std::ostream& out) {
  const TerminalProfile ma = sc.ma_profile();
  const ArrayGeometry geom = sc.geometry();
  Rng rng = substream(sc.seed, 0);
  const ReceivedVector rv = transmit(Hypothesis::H1, ma, sc.psi, sc.noise(), geom, rng);
  const EstimateSet est = estimate_all(rv, geom, sc.grid());
  const LinkConstants lc = link_constants(ma, sc.sigma_sq);

  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["seed"] = sc.seed;
  j["grid_step"] = sc.grid_step;
  j["truth"] = {
      {"omega", ma.direction.omega},
      {"mu", ma.direction.mu},
      {"x_sq", lc.x_amp * lc.x_amp},
      {"lambda_sq", ma.rician_lambda_sq},
      {"psi", sc.psi},
  };
  j["estimate"] = {
      {"omega", est.dir_hat.omega},
      {"mu", est.dir_hat.mu},
      {"x_sq", est.x_sq_hat},
      {"lambda_sq", est.lambda_sq_hat},
      {"psi", est.psi_hat},
      {"xi_star", est.xi_star},
      {"peak", est.peak},
      {"low_confidence", est.low_confidence},
  };
  j["error"] = {
      {"omega_steps", std::abs(est.dir_hat.omega - ma.direction.omega) / sc.grid_step},
      {"mu_steps", std::abs(est.dir_hat.mu - ma.direction.mu) / sc.grid_step},
  };
  out << j.dump(2) << "\n";
}

}  // namespace gaa
