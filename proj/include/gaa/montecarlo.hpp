// SPDX-License-Identifier: Apache-2.0
//
// Seeded trial generation under both hypotheses, empirical rate estimation,
// and ROC construction. Trial i always consumes the substream derived from
// (master_seed, i), so results do not depend on the thread count.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gaa/detector.hpp"
#include "gaa/estimator.hpp"
#include "gaa/signal.hpp"

namespace gaa {

struct TrialConfig {
  long n_trials = 1000;
  std::uint64_t master_seed = 1;
  Hypothesis hypothesis = Hypothesis::H0;
  ArrayGeometry geom;
  GcsKnowledge gcs;
  std::optional<TerminalProfile> ma_profile;  // present iff hypothesis == H1
  double psi = 0.0;
  GridSpec grid;
  NoiseParams noise;
  int n_threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct RateEstimate {
  double rate = 0.0;
  double std_err = 0.0;
  long n = 0;
};

struct TrialStats {
  std::vector<double> statistic;  // test statistic per trial, index = trial
  long floored = 0;               // trials where the log argument was floored
};

/// Computes the test statistic for every trial; the expensive part of any
/// rate estimate. Thresholds are applied afterwards so sweeps reuse it.
TrialStats trial_statistics(const TrialConfig& cfg);

/// Fraction of cached statistics strictly above the threshold.
RateEstimate exceedance_rate(const std::vector<double>& statistics, double threshold);

RateEstimate run_trials(const TrialConfig& cfg, double threshold);

/// (FAR, SDR) at each threshold; statistics are computed once per config.
/// Both configs must share geometry and noise level.
std::vector<std::pair<double, double>> roc_curve(const TrialConfig& cfg_h0,
                                                 const TrialConfig& cfg_h1,
                                                 const std::vector<double>& thresholds);

}  // namespace gaa
