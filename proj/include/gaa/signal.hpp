// SPDX-License-Identifier: Apache-2.0
//
// Training sequences, packet transmission under both hypotheses, and
// matched filtering down to the normalized observation y_bar = y / sqrt(L).
#pragma once

#include <Eigen/Dense>

#include "gaa/array.hpp"
#include "gaa/rng.hpp"

namespace gaa {

enum class Hypothesis { H0, H1 };

/// Known training sequence with ||s||^2 = 1.
struct TrainingSequence {
  Eigen::VectorXcd s;
  void validate() const;
};

/// Effective post-matching noise variance sigma^2. This is the single noise
/// knob of the library; the explicit packet path derives its per-symbol
/// noise floor from it (see transmit_explicit).
struct NoiseParams {
  double sigma_sq = 0.01;
  void validate() const;
};

/// Post-matched-filter observation, normalized: y_bar = y / sqrt(L).
struct ReceivedVector {
  Eigen::VectorXcd y_bar;
  double sigma_sq = 0.0;
};

/// Random unit-norm training sequence (complex Gaussian, then normalized).
TrainingSequence gen_training(int length, Rng& rng);

/// Synthesizes one received packet directly in the matched-filter domain:
///   y = sqrt(P) d^{-alpha/2} (lambda a + delta h) e^{j psi [hyp=H1]} + n,
/// n ~ CN(0, sigma^2 I), and returns y_bar = y / sqrt(L).
/// Draw order is fixed (h first, then n). sigma_sq == 0 skips the noise add.
/// Throws std::invalid_argument if psi != 0 under H0.
ReceivedVector transmit(Hypothesis hyp, const TerminalProfile& profile, double psi,
                        const NoiseParams& noise, const ArrayGeometry& geom, Rng& rng);

/// Full packet path: forms the L x L_s packet matrix with per-symbol noise
/// variance sigma_N^2 = sigma^2 * L_s, transmits sqrt(L_s) * s, matched
/// filters and rescales. Statistically identical to transmit(); kept for the
/// equivalence property test and as the reference for the packet format.
ReceivedVector transmit_explicit(Hypothesis hyp, const TerminalProfile& profile, double psi,
                                 const TrainingSequence& s, const NoiseParams& noise,
                                 const ArrayGeometry& geom, Rng& rng);

/// y = Y s. Throws std::invalid_argument on dimension mismatch.
Eigen::VectorXcd matched_filter(const Eigen::Ref<const Eigen::MatrixXcd>& packet,
                                const TrainingSequence& s);

}  // namespace gaa
