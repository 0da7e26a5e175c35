// SPDX-License-Identifier: Apache-2.0

#include "gaa/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace gaa {

void TrainingSequence::validate() const {
  if (s.size() < 1) throw std::invalid_argument("TrainingSequence: empty");
  if (std::abs(s.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("TrainingSequence: ||s||^2 must equal 1");
  }
}

void NoiseParams::validate() const {
  if (!(sigma_sq > 0.0)) throw std::invalid_argument("NoiseParams: sigma_sq must be > 0");
}

TrainingSequence gen_training(int length, Rng& rng) {
  if (length < 1) throw std::invalid_argument("gen_training: length must be >= 1");
  TrainingSequence t;
  t.s.resize(length);
  fill_complex_gaussian(rng, 1.0, t.s);
  const double nrm = t.s.norm();
  if (nrm == 0.0) {
    t.s.setZero();
    t.s[0] = 1.0;  // measure-zero, but keep the invariant
  } else {
    t.s /= nrm;
  }
  return t;
}

ReceivedVector transmit(Hypothesis hyp, const TerminalProfile& profile, double psi,
                        const NoiseParams& noise, const ArrayGeometry& geom, Rng& rng) {
  if (hyp == Hypothesis::H0 && psi != 0.0) {
    throw std::invalid_argument("transmit: psi must be 0 under H0");
  }
  if (!(noise.sigma_sq >= 0.0)) throw std::invalid_argument("transmit: sigma_sq must be >= 0");
  const ChannelRealization ch = synth_channel(profile, geom, rng);
  Eigen::VectorXcd y = std::sqrt(profile.power_mw) * ch.f;
  if (hyp == Hypothesis::H1 && psi != 0.0) {
    y *= std::polar(1.0, psi);
  }
  if (noise.sigma_sq > 0.0) {
    Eigen::VectorXcd n(geom.total());
    fill_complex_gaussian(rng, noise.sigma_sq, n);
    y += n;
  }
  ReceivedVector rv;
  rv.y_bar = y / std::sqrt(static_cast<double>(geom.total()));
  rv.sigma_sq = noise.sigma_sq;
  return rv;
}

ReceivedVector transmit_explicit(Hypothesis hyp, const TerminalProfile& profile, double psi,
                                 const TrainingSequence& s, const NoiseParams& noise,
                                 const ArrayGeometry& geom, Rng& rng) {
  if (hyp == Hypothesis::H0 && psi != 0.0) {
    throw std::invalid_argument("transmit_explicit: psi must be 0 under H0");
  }
  s.validate();
  if (!(noise.sigma_sq >= 0.0)) {
    throw std::invalid_argument("transmit_explicit: sigma_sq must be >= 0");
  }
  const Eigen::Index ls = s.s.size();
  const double root_ls = std::sqrt(static_cast<double>(ls));
  const ChannelRealization ch = synth_channel(profile, geom, rng);

  // Transmitted training is sqrt(L_s) * s (unit average symbol energy), and
  // the per-symbol noise floor is sigma_N^2 = sigma^2 * L_s. Matching with s
  // and dividing by sqrt(L_s) then lands on the same y as transmit().
  Eigen::VectorXcd f_term = std::sqrt(profile.power_mw) * ch.f;
  if (hyp == Hypothesis::H1 && psi != 0.0) {
    f_term *= std::polar(1.0, psi);
  }
  Eigen::MatrixXcd packet = f_term * (root_ls * s.s).adjoint();
  if (noise.sigma_sq > 0.0) {
    const double sigma_n_sq = noise.sigma_sq * static_cast<double>(ls);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 * sigma_n_sq));
    for (Eigen::Index col = 0; col < ls; ++col) {
      for (Eigen::Index row = 0; row < packet.rows(); ++row) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        packet(row, col) += std::complex<double>(re, im);
      }
    }
  }
  const Eigen::VectorXcd y = matched_filter(packet, s) / root_ls;
  ReceivedVector rv;
  rv.y_bar = y / std::sqrt(static_cast<double>(geom.total()));
  rv.sigma_sq = noise.sigma_sq;
  return rv;
}

Eigen::VectorXcd matched_filter(const Eigen::Ref<const Eigen::MatrixXcd>& packet,
                                const TrainingSequence& s) {
  if (packet.cols() != s.s.size()) {
    throw std::invalid_argument("matched_filter: packet columns must match sequence length");
  }
  return packet * s.s;
}

}  // namespace gaa
