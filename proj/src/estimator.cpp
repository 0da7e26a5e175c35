// SPDX-License-Identifier: Apache-2.0

#include "gaa/estimator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaa {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> make_axis(double step) {
  // points -1 + i*step strictly inside (-1, 1)
  std::vector<double> axis;
  const long count = static_cast<long>(std::ceil(2.0 / step - 1e-9)) - 1;
  axis.reserve(static_cast<size_t>(std::max(count, 0L)));
  for (long i = 1; i <= count; ++i) {
    const double v = -1.0 + static_cast<double>(i) * step;
    if (v >= 1.0) break;
    axis.push_back(v);
  }
  return axis;
}
}  // namespace

void GridSpec::validate() const {
  if (!(step > 0.0 && step < 2.0)) {
    throw std::invalid_argument("GridSpec: step must lie in (0, 2)");
  }
}

DirectionGrid::DirectionGrid(const ArrayGeometry& geom, const GridSpec& spec)
    : geom_(geom), spec_(spec) {
  geom_.validate();
  spec_.validate();
  axis_ = make_axis(spec_.step);
  if (axis_.empty()) throw std::invalid_argument("DirectionGrid: step too coarse, empty grid");
  const Eigen::Index n = static_cast<Eigen::Index>(axis_.size());
  const int nx = 2 * geom_.m_half + 1;
  ax_.resize(n, nx);
  ay_.resize(n, geom_.n_y);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index col = 0;
    for (int k = geom_.m_half; k >= -geom_.m_half; --k) {
      ax_(i, col++) = std::polar(1.0, kPi * k * axis_[static_cast<size_t>(i)]);
    }
    for (int k = 1; k <= geom_.n_y; ++k) {
      ay_(i, k - 1) = std::polar(1.0, -kPi * k * axis_[static_cast<size_t>(i)]);
    }
  }
}

double DirectionGrid::objective(const Eigen::Ref<const Eigen::VectorXcd>& y_bar,
                                const DirectionCosines& dir) const {
  const Eigen::VectorXcd a = steering_vector(geom_, dir);
  const std::complex<double> z = y_bar.dot(a);
  return std::norm(z) / static_cast<double>(geom_.total());
}

GridSearchResult DirectionGrid::search(const Eigen::Ref<const Eigen::VectorXcd>& y_bar) const {
  const int l_total = geom_.total();
  if (y_bar.size() != l_total) {
    throw std::invalid_argument("DirectionGrid::search: observation length mismatch");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(axis_.size());
  const int nx = 2 * geom_.m_half + 1;

  // Separable split: y_bar^H a = p(omega) + q(mu), so the grid objective is
  // |p_i + q_j|^2 evaluated over the n x n product grid.
  const Eigen::VectorXcd yx_conj = y_bar.head(nx).conjugate();
  const Eigen::VectorXcd yy_conj = y_bar.tail(geom_.n_y).conjugate();
  const Eigen::VectorXcd p = ax_ * yx_conj;
  const Eigen::VectorXcd q = ay_ * yy_conj;

  std::vector<double> qr(static_cast<size_t>(n)), qi(static_cast<size_t>(n));
  double max_abs_q = 0.0;
  Eigen::Index jq = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    qr[static_cast<size_t>(j)] = q[j].real();
    qi[static_cast<size_t>(j)] = q[j].imag();
    const double aq = std::abs(q[j]);
    if (aq > max_abs_q) {
      max_abs_q = aq;
      jq = j;
    }
  }
  Eigen::Index ip = 0;
  double max_abs_p = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ap = std::abs(p[i]);
    if (ap > max_abs_p) {
      max_abs_p = ap;
      ip = i;
    }
  }
  // Seed value for pruning; rows whose best possible |p_i| + max|q| cannot
  // reach it are skipped. Rows containing the true maximum always survive,
  // so value and lexicographic argmax match the plain full scan exactly.
  const double cand = std::norm(p[ip] + q[jq]);

  double best = -1.0;
  Eigen::Index bi = 0, bj = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double reach = std::abs(p[i]) + max_abs_q;
    if (reach * reach < cand) continue;
    const double cr = p[i].real();
    const double ci = p[i].imag();
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = cr + qr[static_cast<size_t>(j)];
      const double im = ci + qi[static_cast<size_t>(j)];
      const double val = re * re + im * im;
      if (val > best) {
        best = val;
        bi = i;
        bj = j;
      }
    }
  }

  GridSearchResult res;
  res.dir = DirectionCosines{axis_[static_cast<size_t>(bi)], axis_[static_cast<size_t>(bj)]};
  res.peak = best / static_cast<double>(l_total);
  if (spec_.refine) res = refine_around(y_bar, res);
  return res;
}

GridSearchResult DirectionGrid::refine_around(const Eigen::Ref<const Eigen::VectorXcd>& y_bar,
                                              const GridSearchResult& coarse) const {
  const double fine = spec_.step / 10.0;
  GridSearchResult best = coarse;
  for (int di = -10; di <= 10; ++di) {
    const double w = coarse.dir.omega + di * fine;
    if (w <= -1.0 || w >= 1.0) continue;
    for (int dj = -10; dj <= 10; ++dj) {
      const double m = coarse.dir.mu + dj * fine;
      if (m <= -1.0 || m >= 1.0) continue;
      const DirectionCosines dir{w, m};
      const double val = objective(y_bar, dir);
      if (val > best.peak) {
        best.peak = val;
        best.dir = dir;
      }
    }
  }
  return best;
}

GridSearchResult grid_search_direction(const ReceivedVector& y_bar, const ArrayGeometry& geom,
                                       const GridSpec& grid) {
  return DirectionGrid(geom, grid).search(y_bar.y_bar);
}

EstimateSet estimate_all(const ReceivedVector& rv, const DirectionGrid& grid) {
  const GridSearchResult gs = grid.search(rv.y_bar);
  const double norm_sq = rv.y_bar.squaredNorm();
  const double sigma_sq = rv.sigma_sq;

  EstimateSet est;
  est.dir_hat = gs.dir;
  est.peak = gs.peak;
  est.xi_star = norm_sq - gs.peak - sigma_sq;
  est.low_confidence = !(norm_sq > sigma_sq);

  const double x_sq_full = norm_sq - sigma_sq;
  if (est.xi_star >= 0.0 && x_sq_full > 0.0) {
    est.x_sq_hat = x_sq_full;
    est.lambda_sq_hat = std::clamp(gs.peak / x_sq_full, 0.0, 1.0);
  } else {
    est.x_sq_hat = gs.peak;
    est.lambda_sq_hat = 1.0;
  }

  const Eigen::VectorXcd a = steering_vector(grid.geometry(), gs.dir);
  const std::complex<double> z =
      rv.y_bar.dot(a) / std::sqrt(static_cast<double>(grid.geometry().total()));
  if (std::abs(z) > 0.0) {
    double psi = -std::arg(z);  // e^{-j psi} = z / |z|
    if (psi < 0.0) psi += kTwoPi;
    if (psi >= kTwoPi) psi -= kTwoPi;
    est.psi_hat = psi;
  } else {
    est.psi_hat = 0.0;
  }
  return est;
}

EstimateSet estimate_all(const ReceivedVector& rv, const ArrayGeometry& geom,
                         const GridSpec& grid) {
  return estimate_all(rv, DirectionGrid(geom, grid));
}

double nll_objective(const ReceivedVector& rv, double x, double lambda,
                     const DirectionCosines& dir, double psi, const ArrayGeometry& geom,
                     double sigma_sq) {
  if (!(x >= 0.0)) throw std::invalid_argument("nll_objective: x must be >= 0");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("nll_objective: lambda must lie in [0,1]");
  }
  if (!(sigma_sq > 0.0)) throw std::invalid_argument("nll_objective: sigma_sq must be > 0");
  const Eigen::VectorXcd a_bar =
      steering_vector(geom, dir) / std::sqrt(static_cast<double>(geom.total()));
  const Eigen::VectorXcd resid = rv.y_bar - (x * lambda * std::polar(1.0, psi)) * a_bar;
  const double denom = x * x * (1.0 - lambda * lambda) + sigma_sq;
  return resid.squaredNorm() / denom + std::log(denom);
}

}  // namespace gaa
