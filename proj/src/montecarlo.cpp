// SPDX-License-Identifier: Apache-2.0

#include "gaa/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "gaa/rng.hpp"

namespace gaa {

void TrialConfig::validate() const {
  if (n_trials < 0) throw std::invalid_argument("TrialConfig: n_trials must be >= 0");
  geom.validate();
  grid.validate();
  noise.validate();
  if (hypothesis == Hypothesis::H1) {
    if (!ma_profile) throw std::invalid_argument("TrialConfig: H1 requires an attacker profile");
    ma_profile->validate();
  } else {
    if (ma_profile) throw std::invalid_argument("TrialConfig: H0 must not carry an attacker profile");
    if (psi != 0.0) throw std::invalid_argument("TrialConfig: psi must be 0 under H0");
  }
}

namespace {

int resolve_threads(int requested, long n_trials) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (static_cast<long>(n) > n_trials) n = static_cast<int>(std::max(n_trials, 1L));
  return n;
}

}  // namespace

TrialStats trial_statistics(const TrialConfig& cfg) {
  cfg.validate();
  const DirectionGrid grid(cfg.geom, cfg.grid);
  const TerminalProfile& profile =
      cfg.hypothesis == Hypothesis::H1 ? *cfg.ma_profile : cfg.gcs.profile;
  const double psi = cfg.hypothesis == Hypothesis::H1 ? cfg.psi : 0.0;

  TrialStats stats;
  stats.statistic.assign(static_cast<size_t>(cfg.n_trials), 0.0);
  if (cfg.n_trials == 0) return stats;

  const int n_threads = resolve_threads(cfg.n_threads, cfg.n_trials);
  std::vector<long> floored(static_cast<size_t>(n_threads), 0);

  const auto worker = [&](int tid, long begin, long end) {
    for (long i = begin; i < end; ++i) {
      Rng rng = substream(cfg.master_seed, static_cast<std::uint64_t>(i));
      const ReceivedVector rv =
          transmit(cfg.hypothesis, profile, psi, cfg.noise, cfg.geom, rng);
      const GlrBreakdown stat = glr_statistic_full(rv, cfg.gcs, grid);
      stats.statistic[static_cast<size_t>(i)] = stat.value;
      if (stat.floored) ++floored[static_cast<size_t>(tid)];
    }
  };

  if (n_threads == 1) {
    worker(0, 0, cfg.n_trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    const long chunk = (cfg.n_trials + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const long begin = static_cast<long>(t) * chunk;
      const long end = std::min(begin + chunk, cfg.n_trials);
      if (begin >= end) break;
      pool.emplace_back(worker, t, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  for (long f : floored) stats.floored += f;
  return stats;
}

RateEstimate exceedance_rate(const std::vector<double>& statistics, double threshold) {
  RateEstimate est;
  est.n = static_cast<long>(statistics.size());
  if (est.n == 0) return est;
  long hits = 0;
  for (double t : statistics) {
    if (t > threshold) ++hits;
  }
  est.rate = static_cast<double>(hits) / static_cast<double>(est.n);
  est.std_err = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(est.n));
  return est;
}

RateEstimate run_trials(const TrialConfig& cfg, double threshold) {
  const TrialStats stats = trial_statistics(cfg);
  return exceedance_rate(stats.statistic, threshold);
}

std::vector<std::pair<double, double>> roc_curve(const TrialConfig& cfg_h0,
                                                 const TrialConfig& cfg_h1,
                                                 const std::vector<double>& thresholds) {
  if (cfg_h0.geom.m_half != cfg_h1.geom.m_half || cfg_h0.geom.n_y != cfg_h1.geom.n_y) {
    throw std::invalid_argument("roc_curve: configs must share array geometry");
  }
  if (cfg_h0.noise.sigma_sq != cfg_h1.noise.sigma_sq) {
    throw std::invalid_argument("roc_curve: configs must share the noise level");
  }
  const TrialStats h0 = trial_statistics(cfg_h0);
  const TrialStats h1 = trial_statistics(cfg_h1);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(thresholds.size());
  for (double tau : thresholds) {
    curve.emplace_back(exceedance_rate(h0.statistic, tau).rate,
                       exceedance_rate(h1.statistic, tau).rate);
  }
  return curve;
}

}  // namespace gaa
