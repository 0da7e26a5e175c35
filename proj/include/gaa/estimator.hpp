// SPDX-License-Identifier: Apache-2.0
//
// Maximum-likelihood estimation of the unknown transmitter parameters:
// exhaustive direction grid search plus the closed-form amplitude, LOS
// fraction and phase estimates.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gaa/array.hpp"
#include "gaa/signal.hpp"

namespace gaa {

/// Search grid over (-1,1)x(-1,1) in direction-cosine space. Grid points are
/// -1 + i*step for i = 1, 2, ... strictly inside the box, both axes.
struct GridSpec {
  double step = 0.005;
  bool refine = false;  // optional local pass at step/10 around the peak
  void validate() const;
};

struct GridSearchResult {
  DirectionCosines dir;
  double peak = 0.0;  // max over the grid of |y_bar^H a_bar(omega, mu)|^2
};

/// Precomputed steering tables for one (geometry, grid) pair. Searches are
/// deterministic: ties resolve to the smallest (omega, mu) in lexicographic
/// order, identical to a plain sequential scan.
class DirectionGrid {
 public:
  DirectionGrid(const ArrayGeometry& geom, const GridSpec& spec);

  GridSearchResult search(const Eigen::Ref<const Eigen::VectorXcd>& y_bar) const;

  const std::vector<double>& axis() const { return axis_; }
  const ArrayGeometry& geometry() const { return geom_; }
  const GridSpec& spec() const { return spec_; }

 private:
  double objective(const Eigen::Ref<const Eigen::VectorXcd>& y_bar,
                   const DirectionCosines& dir) const;
  GridSearchResult refine_around(const Eigen::Ref<const Eigen::VectorXcd>& y_bar,
                                 const GridSearchResult& coarse) const;

  ArrayGeometry geom_;
  GridSpec spec_;
  std::vector<double> axis_;
  Eigen::MatrixXcd ax_;  // row i = a_X(axis_[i])^T
  Eigen::MatrixXcd ay_;  // row j = a_Y(axis_[j])^T
};

/// Estimates produced from one observation.
struct EstimateSet {
  DirectionCosines dir_hat;
  double x_sq_hat = 0.0;       // estimate of x^2 = P d^{-alpha}
  double lambda_sq_hat = 0.0;  // estimate of lambda^2, in [0,1]
  double psi_hat = 0.0;        // phase estimate in [0, 2*pi)
  double xi_star = 0.0;        // ||y_bar||^2 - peak - sigma^2
  double peak = 0.0;
  bool low_confidence = false;  // ||y_bar||^2 <= sigma^2 (noise-dominated)
};

/// Convenience single-shot search; builds the steering tables on the fly.
/// Monte Carlo paths should construct a DirectionGrid once and reuse it.
GridSearchResult grid_search_direction(const ReceivedVector& y_bar, const ArrayGeometry& geom,
                                       const GridSpec& grid);

EstimateSet estimate_all(const ReceivedVector& y_bar, const DirectionGrid& grid);
EstimateSet estimate_all(const ReceivedVector& y_bar, const ArrayGeometry& geom,
                         const GridSpec& grid);

/// The concentrated negative log likelihood evaluated at an arbitrary
/// parameter tuple:
///   ||y_bar - x lambda a_bar e^{j psi}||^2 / (x^2 (1-lambda^2) + sigma^2)
///   + ln(x^2 (1-lambda^2) + sigma^2).
/// Serves as the independent optimality oracle for estimate_all.
double nll_objective(const ReceivedVector& y_bar, double x, double lambda,
                     const DirectionCosines& dir, double psi, const ArrayGeometry& geom,
                     double sigma_sq);

}  // namespace gaa
