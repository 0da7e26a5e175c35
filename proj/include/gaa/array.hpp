// SPDX-License-Identifier: Apache-2.0
//
// T-shaped antenna array geometry, steering vectors, and Rician
// ground-to-air channel synthesis.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "gaa/rng.hpp"

namespace gaa {

/// T-shaped array: 2*m_half+1 elements on the x axis, n_y on the y axis,
/// adjacent elements half a wavelength apart.
struct ArrayGeometry {
  int m_half = 6;
  int n_y = 12;

  int total() const { return 2 * m_half + 1 + n_y; }
  void validate() const;
};

/// Direction cosines (omega, mu) = (sin(theta)cos(phi), sin(theta)sin(phi)).
struct DirectionCosines {
  double omega = 0.0;
  double mu = 0.0;

  bool in_bounds() const {
    return omega >= -1.0 && omega <= 1.0 && mu >= -1.0 && mu <= 1.0;
  }
};

/// Arrival angles in radians. Only ever consumed through
/// angles_to_cosines(); the rest of the library works in cosines.
struct AnglePair {
  double theta = 0.0;
  double phi = 0.0;
};

/// Physical parameters of one transmitter (GCS or attacker).
struct TerminalProfile {
  double power_mw = 100.0;          // transmit power P, mW
  double distance_m = 20.0;         // distance d to the receiving array, m
  double rician_lambda_sq = 0.8;    // LOS power fraction lambda^2 = 1/(1+kappa)
  DirectionCosines direction;       // (omega, mu) of arrival
  double path_loss_exp = 2.0;       // path loss exponent alpha

  double delta_sq() const { return 1.0 - rician_lambda_sq; }
  double kappa() const { return 1.0 / rician_lambda_sq - 1.0; }
  void validate() const;
};

/// Per-link constants used by the detector and the analytic models:
///   los_amp = sqrt(P) d^{-alpha/2} lambda        (LOS amplitude)
///   eps_sq  = P d^{-alpha} (1 - lambda^2) + sigma^2
///   x_amp   = sqrt(P) d^{-alpha/2}
struct LinkConstants {
  double los_amp = 0.0;
  double eps_sq = 0.0;
  double x_amp = 0.0;
};

/// A channel draw f = d^{-alpha/2} (lambda a + delta h) together with the
/// non-LOS component h that produced it.
struct ChannelRealization {
  Eigen::VectorXcd f;
  Eigen::VectorXcd h;
};

DirectionCosines angles_to_cosines(const AnglePair& angles);

/// Scenario-construction helper: slant distance of a ground terminal seen
/// from a platform at `height_m`, with theta measured off the vertical.
double distance_from_height(double height_m, double theta);

/// Array response a(omega, mu), length total(); squared norm equals total().
/// Throws std::invalid_argument if dir is outside [-1,1]^2.
Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, const DirectionCosines& dir);

LinkConstants link_constants(const TerminalProfile& profile, double sigma_sq);

ChannelRealization synth_channel(const TerminalProfile& profile, const ArrayGeometry& geom,
                                 Rng& rng);

/// Deterministic (Householder) unitary completion: returns a unitary matrix
/// whose first column equals the given unit vector.
/// Throws std::invalid_argument unless ||u|| == 1 within 1e-12.
Eigen::MatrixXcd unitary_completion(const Eigen::Ref<const Eigen::VectorXcd>& u);

}  // namespace gaa
