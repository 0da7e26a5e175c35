// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gaa {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive decorrelated seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Counter-based substream: trial `index` under `master_seed` always gets the
/// same generator, independent of how trials are scheduled across threads.
inline Rng substream(std::uint64_t master_seed, std::uint64_t index) {
  return Rng(mix64(master_seed ^ mix64(index)));
}

/// One draw from CN(0, variance): real and imaginary parts N(0, variance/2).
inline std::complex<double> complex_gaussian(Rng& rng, double variance) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5 * variance));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

/// Fills `out` with i.i.d. CN(0, variance) entries, element order fixed.
inline void fill_complex_gaussian(Rng& rng, double variance, Eigen::VectorXcd& out) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5 * variance));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double re = n(rng);
    const double im = n(rng);
    out[i] = {re, im};
  }
}

}  // namespace gaa
