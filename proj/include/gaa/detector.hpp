// SPDX-License-Identifier: Apache-2.0
//
// The simplified GLLR test statistic and threshold decision.
#pragma once

#include <Eigen/Dense>

#include "gaa/array.hpp"
#include "gaa/estimator.hpp"
#include "gaa/signal.hpp"

namespace gaa {

/// Everything the receiver knows about the legitimate transmitter.
struct GcsKnowledge {
  TerminalProfile profile;
  LinkConstants consts;      // alpha_0 = consts.los_amp, eps_0^2 = consts.eps_sq
  Eigen::VectorXcd a0_bar;   // steering_vector(geom, dir0) / sqrt(L)
};

GcsKnowledge make_gcs_knowledge(const TerminalProfile& profile, double sigma_sq,
                                const ArrayGeometry& geom);

struct Verdict {
  double statistic = 0.0;
  double threshold = 0.0;
  Hypothesis decision = Hypothesis::H0;
};

/// Statistic with diagnostics from the grid scan.
struct GlrBreakdown {
  double value = 0.0;
  double peak = 0.0;            // grid maximum of |y_bar^H a_bar|^2
  DirectionCosines dir;         // where the maximum was found
  bool floored = false;         // log argument hit the sigma^2 * 1e-6 floor
};

/// T = ||y_bar - alpha_0 a0_bar||^2 / eps_0^2
///     - ln[(||y_bar||^2 - peak) / eps_0^2].
/// The log argument is floored at sigma^2 * 1e-6 (flagged) so the statistic
/// stays finite on degenerate inputs.
GlrBreakdown glr_statistic_full(const ReceivedVector& rv, const GcsKnowledge& know,
                                const DirectionGrid& grid);
double glr_statistic(const ReceivedVector& rv, const GcsKnowledge& know,
                     const ArrayGeometry& geom, const GridSpec& grid);

/// H1 iff statistic > threshold; a tie goes to H0.
Verdict decide(double statistic, double threshold);

struct AuthReport {
  Verdict verdict;
  EstimateSet estimate;
  bool floored = false;
};

/// Full packet check: statistic, decision, and the parameter estimates for
/// diagnostics.
AuthReport authenticate(const ReceivedVector& rv, const GcsKnowledge& know,
                        const ArrayGeometry& geom, const GridSpec& grid, double threshold);

}  // namespace gaa
