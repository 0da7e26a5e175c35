// SPDX-License-Identifier: Apache-2.0
//
// The experiment recipes behind the CLI subcommands. Each writer emits a
// '#'-prefixed metadata block followed by a CSV header and rows (JSON for
// the single-draw diagnostic); output is byte-stable across reruns and
// thread counts.
#pragma once

#include <iosfwd>
#include <string>

#include "gaa/scenario.hpp"

namespace gaa {

/// eta -> Neyman-Pearson threshold table (CSV columns: eta, tau).
void run_threshold(const Scenario& sc, std::ostream& out);

/// Analytic and empirical FAR/SDR over a tau sweep
/// (CSV columns: tau, far_analytic, far_empirical, sdr_analytic,
/// sdr_empirical). trials = 0 leaves the empirical columns empty.
void run_roc(const Scenario& sc, std::ostream& out);

/// SDR at the scenario's fixed-FAR thresholds while one attacker parameter
/// sweeps. var is one of: theta1, phi1 (degrees), lambda1_sq, p1 (dBm).
void run_sweep(const Scenario& sc, const std::string& var, std::ostream& out);

/// True vs estimated parameters for a single seeded draw, as JSON.
void run_estimate_demo(const Scenario& sc, std::ostream& out);

}  // namespace gaa
