// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test suites: independent quadrature, brute-force
// oracles, and the reference simulation profiles.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "gaa/array.hpp"
#include "gaa/detector.hpp"
#include "gaa/rng.hpp"

namespace gaa::test {

// Adaptive Simpson integration; deliberately independent of the Boost
// machinery used inside the library.
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, 0.5 * eps, depth - 1) +
         simpson(f, m, b, fm, frm, fb, 0.5 * eps, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13, int depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), eps, depth);
}

inline Eigen::VectorXcd random_cn(Rng& rng, int n, double variance = 1.0) {
  Eigen::VectorXcd v(n);
  fill_complex_gaussian(rng, variance, v);
  return v;
}

// The simulation setup used throughout: M=6, N=12, sigma^2 = 0.01 mW,
// GCS at theta=15deg, phi=30deg, 100 mW, lambda^2 = 0.8, 20 m height.
inline ArrayGeometry std_geometry() { return ArrayGeometry{6, 12}; }

inline TerminalProfile std_gcs_profile() {
  TerminalProfile p;
  p.power_mw = 100.0;
  p.rician_lambda_sq = 0.8;
  p.path_loss_exp = 2.0;
  p.direction = angles_to_cosines(AnglePair{15.0 * M_PI / 180.0, 30.0 * M_PI / 180.0});
  p.distance_m = distance_from_height(20.0, 15.0 * M_PI / 180.0);
  return p;
}

inline TerminalProfile profile_at(double theta_deg, double phi_deg, double power_mw,
                                  double lambda_sq) {
  TerminalProfile p;
  p.power_mw = power_mw;
  p.rician_lambda_sq = lambda_sq;
  p.path_loss_exp = 2.0;
  const double th = theta_deg * M_PI / 180.0;
  p.direction = angles_to_cosines(AnglePair{th, phi_deg * M_PI / 180.0});
  p.distance_m = distance_from_height(20.0, th);
  return p;
}

}  // namespace gaa::test
