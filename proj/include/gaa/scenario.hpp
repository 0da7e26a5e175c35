// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented `key = value` scenario files and their mapping onto the
// library types. Unknown and duplicate keys are rejected with line numbers.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaa/analytic.hpp"
#include "gaa/array.hpp"
#include "gaa/estimator.hpp"
#include "gaa/montecarlo.hpp"

namespace gaa {

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Scenario {
  // array and noise
  int m_half = 6;
  int n_y = 12;
  double sigma_sq = 0.01;  // mW
  double path_loss_exp = 2.0;
  double height_m = 20.0;

  // legitimate transmitter; angles in radians
  double theta0 = 15.0 * M_PI / 180.0;
  double phi0 = 30.0 * M_PI / 180.0;
  double p0_mw = 100.0;
  double lambda0_sq = 0.8;
  std::optional<double> d0_m;  // default: height / cos(theta0)

  // attacker; unset fields inherit the corresponding legitimate value
  std::optional<double> theta1;
  std::optional<double> phi1;
  std::optional<double> p1_mw;
  std::optional<double> lambda1_sq;
  std::optional<double> d1_m;  // default: height / cos(theta1)
  double psi = 0.0;

  // experiment controls
  double grid_step = 0.005;
  bool grid_refine = false;
  long trials = 20000;
  std::uint64_t seed = 1;
  int threads = 0;
  int k_split = 2;
  std::vector<double> eta_list{0.02, 0.05, 0.1};
  std::optional<double> tau_min;
  std::optional<double> tau_max;
  int tau_count = 25;
  std::optional<double> sweep_min;
  std::optional<double> sweep_max;
  int sweep_count = 9;

  ArrayGeometry geometry() const;
  NoiseParams noise() const;
  GridSpec grid() const;
  TerminalProfile gcs_profile() const;
  TerminalProfile ma_profile() const;
  GcsKnowledge knowledge() const;
  FarModel far_model() const;

  void validate() const;
};

/// dBm -> mW (20 dBm -> 100 mW exactly).
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

}  // namespace gaa
