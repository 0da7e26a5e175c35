// SPDX-License-Identifier: Apache-2.0

#include "gaa/array.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaa {

namespace {
constexpr double kPi = std::numbers::pi;
}

void ArrayGeometry::validate() const {
  if (m_half < 0 || n_y < 0) {
    throw std::invalid_argument("ArrayGeometry: element counts must be nonnegative");
  }
  if (total() < 2) {
    throw std::invalid_argument("ArrayGeometry: need at least 2 antennas");
  }
}

void TerminalProfile::validate() const {
  if (!(power_mw > 0.0)) throw std::invalid_argument("TerminalProfile: power must be > 0");
  if (!(distance_m > 0.0)) throw std::invalid_argument("TerminalProfile: distance must be > 0");
  if (!(rician_lambda_sq >= 0.0 && rician_lambda_sq <= 1.0)) {
    throw std::invalid_argument("TerminalProfile: lambda^2 must lie in [0,1]");
  }
  if (!(path_loss_exp > 0.0)) {
    throw std::invalid_argument("TerminalProfile: path loss exponent must be > 0");
  }
  if (!direction.in_bounds()) {
    throw std::invalid_argument("TerminalProfile: direction cosines outside [-1,1]^2");
  }
}

DirectionCosines angles_to_cosines(const AnglePair& angles) {
  if (!std::isfinite(angles.theta) || !std::isfinite(angles.phi)) {
    throw std::invalid_argument("angles_to_cosines: angles must be finite");
  }
  const double st = std::sin(angles.theta);
  DirectionCosines d;
  d.omega = st * std::cos(angles.phi);
  d.mu = st * std::sin(angles.phi);
  // |sin theta| <= 1, so only roundoff can push past the box
  d.omega = std::clamp(d.omega, -1.0, 1.0);
  d.mu = std::clamp(d.mu, -1.0, 1.0);
  return d;
}

double distance_from_height(double height_m, double theta) {
  if (!(height_m > 0.0)) throw std::invalid_argument("distance_from_height: height must be > 0");
  const double c = std::cos(theta);
  if (!(c > 0.0)) {
    throw std::invalid_argument("distance_from_height: need theta in (-pi/2, pi/2)");
  }
  return height_m / c;
}

Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, const DirectionCosines& dir) {
  geom.validate();
  if (!dir.in_bounds()) {
    throw std::invalid_argument("steering_vector: direction cosines outside [-1,1]^2");
  }
  Eigen::VectorXcd a(geom.total());
  Eigen::Index idx = 0;
  for (int k = geom.m_half; k >= -geom.m_half; --k) {
    a[idx++] = std::polar(1.0, kPi * k * dir.omega);
  }
  for (int k = 1; k <= geom.n_y; ++k) {
    a[idx++] = std::polar(1.0, -kPi * k * dir.mu);
  }
  return a;
}

LinkConstants link_constants(const TerminalProfile& profile, double sigma_sq) {
  profile.validate();
  if (!(sigma_sq > 0.0)) throw std::invalid_argument("link_constants: sigma_sq must be > 0");
  LinkConstants lc;
  lc.x_amp = std::sqrt(profile.power_mw) * std::pow(profile.distance_m, -0.5 * profile.path_loss_exp);
  lc.los_amp = lc.x_amp * std::sqrt(profile.rician_lambda_sq);
  lc.eps_sq = lc.x_amp * lc.x_amp * profile.delta_sq() + sigma_sq;
  return lc;
}

ChannelRealization synth_channel(const TerminalProfile& profile, const ArrayGeometry& geom,
                                 Rng& rng) {
  profile.validate();
  const Eigen::VectorXcd a = steering_vector(geom, profile.direction);
  ChannelRealization ch;
  ch.h.resize(geom.total());
  fill_complex_gaussian(rng, 1.0, ch.h);
  const double dpow = std::pow(profile.distance_m, -0.5 * profile.path_loss_exp);
  const double lam = std::sqrt(profile.rician_lambda_sq);
  const double del = std::sqrt(profile.delta_sq());
  ch.f = dpow * (lam * a + del * ch.h);
  return ch;
}

Eigen::MatrixXcd unitary_completion(const Eigen::Ref<const Eigen::VectorXcd>& u) {
  const Eigen::Index n = u.size();
  if (n < 1) throw std::invalid_argument("unitary_completion: empty vector");
  if (std::abs(u.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("unitary_completion: input must be a unit vector");
  }
  // Householder reflector H = I - 2 v v^H / ||v||^2 with v = u - alpha e1,
  // alpha = -exp(j arg u1). Then H u = alpha e1 and H e1 = u / alpha, so
  // scaling the first column by alpha makes it exactly u.
  const std::complex<double> u0 = u[0];
  const std::complex<double> alpha =
      (std::abs(u0) == 0.0) ? std::complex<double>(-1.0, 0.0) : -u0 / std::abs(u0);
  Eigen::VectorXcd v = u;
  v[0] -= alpha;
  const double vn2 = v.squaredNorm();  // = 2 (1 + |u0|) >= 2, never degenerate
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
  q.noalias() -= (2.0 / vn2) * (v * v.adjoint());
  q.col(0) *= alpha;
  return q;
}

}  // namespace gaa
