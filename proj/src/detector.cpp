// SPDX-License-Identifier: Apache-2.0

#include "gaa/detector.hpp"

#include <cmath>
#include <stdexcept>

namespace gaa {

GcsKnowledge make_gcs_knowledge(const TerminalProfile& profile, double sigma_sq,
                                const ArrayGeometry& geom) {
  GcsKnowledge know;
  know.profile = profile;
  know.consts = link_constants(profile, sigma_sq);
  know.a0_bar = steering_vector(geom, profile.direction) /
                std::sqrt(static_cast<double>(geom.total()));
  return know;
}

GlrBreakdown glr_statistic_full(const ReceivedVector& rv, const GcsKnowledge& know,
                                const DirectionGrid& grid) {
  const double eps_sq = know.consts.eps_sq;
  if (!(eps_sq > 0.0)) throw std::invalid_argument("glr_statistic: eps_0^2 must be > 0");
  if (rv.y_bar.size() != know.a0_bar.size()) {
    throw std::invalid_argument("glr_statistic: observation length mismatch");
  }

  const GridSearchResult gs = grid.search(rv.y_bar);
  const double resid = (rv.y_bar - know.consts.los_amp * know.a0_bar).squaredNorm();

  GlrBreakdown out;
  out.peak = gs.peak;
  out.dir = gs.dir;
  double log_arg = rv.y_bar.squaredNorm() - gs.peak;
  const double floor = rv.sigma_sq * 1e-6;
  if (!(log_arg > floor)) {
    log_arg = floor;
    out.floored = true;
  }
  out.value = resid / eps_sq - std::log(log_arg / eps_sq);
  return out;
}

double glr_statistic(const ReceivedVector& rv, const GcsKnowledge& know,
                     const ArrayGeometry& geom, const GridSpec& grid) {
  return glr_statistic_full(rv, know, DirectionGrid(geom, grid)).value;
}

Verdict decide(double statistic, double threshold) {
  Verdict v;
  v.statistic = statistic;
  v.threshold = threshold;
  v.decision = statistic > threshold ? Hypothesis::H1 : Hypothesis::H0;
  return v;
}

AuthReport authenticate(const ReceivedVector& rv, const GcsKnowledge& know,
                        const ArrayGeometry& geom, const GridSpec& grid, double threshold) {
  const DirectionGrid dg(geom, grid);
  const GlrBreakdown stat = glr_statistic_full(rv, know, dg);
  AuthReport report;
  report.verdict = decide(stat.value, threshold);
  report.estimate = estimate_all(rv, dg);
  report.floored = stat.floored;
  return report;
}

}  // namespace gaa
