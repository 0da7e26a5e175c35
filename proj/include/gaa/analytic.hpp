// SPDX-License-Identifier: Apache-2.0
//
// Semi-closed-form approximations of the false alarm and successful
// detection rates, the supporting special-function segments, and the
// Neyman-Pearson threshold search.
#pragma once

#include <complex>

#include "gaa/array.hpp"
#include "gaa/detector.hpp"

namespace gaa {

/// Null-hypothesis surrogate T ~ X + Y - ln Y with X ~ Gamma(k, 1/L) and
/// Y ~ Gamma(L-k, 1/L). k may be any integer in {2, ..., L-1}.
struct FarModel {
  int l_ant = 25;
  int k_split = 2;
  void validate() const;
};

/// Alternative-hypothesis surrogate T ~ X + Y - ln Y where X is a scaled
/// noncentral chi-square (4 real degrees of freedom, noncentrality
/// 2 * rho_factor * beta_norm_sq) and Y ~ Gamma(L-2, 1/rho_factor).
struct SdrModel {
  int l_ant = 25;
  double rho_factor = 25.0;               // eps_0^2 L / eps_1^2
  double beta_norm_sq = 0.0;              // ||beta||^2 = ||Delta||^2
  std::complex<double> beta1{0.0, 0.0};   // a1_bar^H Delta
  double rho_tail = 0.0;                  // ||beta_(2,L)||
  void validate() const;
};

/// The two roots of e^{x - tau} = x, q_lo in (0, tau], q_hi in [tau, inf).
struct RootPair {
  double q_lo = 1.0;
  double q_hi = 1.0;
};

struct SdrCcdf {
  double value = 1.0;
  bool converged = true;
  int terms = 0;  // series terms evaluated
};

/// gamma(n, a; b, c) = integral_b^c x^n e^{-a x} dx for 0 <= b <= c and any
/// real a (a = 0 reduces to the plain power integral). Evaluated through
/// regularized incomplete gamma differences (a > 0) or an all-positive power
/// series (a < 0); the textbook finite-sum expansion cancels catastrophically
/// once a*b << n, so it is not used.
double gamma_segment(int n, double a, double b, double c);

/// log of gamma_segment; the integrand is positive so no sign is needed.
/// Returns -inf when the segment is empty or fully cancelled.
double gamma_segment_log(int n, double a, double b, double c);

/// Roots of e^{x - tau} = x, residuals below 1e-12. Requires tau >= 1
/// (x - ln x attains its minimum value 1), otherwise throws std::domain_error.
RootPair fixed_points(double tau);

/// P{X + Y - ln Y < tau} for the FarModel surrogate; 0 for tau <= 1.
double far_cdf(double tau, const FarModel& model);

/// Smallest tau with 1 - far_cdf(tau) = eta, residual below 1e-9.
double far_threshold(double eta, const FarModel& model);

/// Builds the detection-side surrogate for a given attacker profile and
/// phase offset. beta is obtained through the unitary completion of a1_bar;
/// beta1 itself is completion-independent.
SdrModel build_sdr_model(const GcsKnowledge& gcs, const TerminalProfile& ma_profile, double psi,
                         double sigma_sq, const ArrayGeometry& geom);

/// Density of the noncentral part X at x; Gamma(2, 1/rho) when
/// beta_norm_sq == 0.
double noncentral_pdf(double x, const SdrModel& model);

/// P{X + Y - ln Y > tau} for the SdrModel surrogate; 1 for tau <= 1.
/// The Bessel series over k is truncated at relative tail 1e-12 with a hard
/// cap of 500 terms; hitting the cap clears `converged`.
SdrCcdf sdr_ccdf(double tau, const SdrModel& model);

}  // namespace gaa
