// SPDX-License-Identifier: Apache-2.0

#include "gaa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace gaa {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(c^m - b^m) for 0 <= b <= c, c > 0, m >= 1
double log_power_diff(double b, double c, double m) {
  if (c <= 0.0) return kNegInf;
  const double ratio = b / c;
  if (ratio >= 1.0) return kNegInf;
  const double tail = std::pow(ratio, m);
  return m * std::log(c) + std::log1p(-(tail < 1.0 ? tail : 1.0));
}

// log(e^{la} - e^{lb}) assuming la >= lb; -inf when fully cancelled
double log_sub(double la, double lb) {
  if (lb >= la) return kNegInf;
  if (lb == kNegInf) return la;
  return la + std::log1p(-std::exp(lb - la));
}

// Streaming sum of positive terms given by their logs.
class LogSum {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term > max_) {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    } else {
      sum_ += std::exp(log_term - max_);
    }
  }
  bool empty() const { return max_ == kNegInf; }
  double log() const { return empty() ? kNegInf : max_ + std::log(sum_); }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

// x - ln x - tau; decreasing on (0,1], increasing on [1,inf)
double root_fn(double x, double tau) { return x - std::log(x) - tau; }

double bisect_root(double lo, double hi, double tau, bool descending) {
  // invariant: sign change inside [lo, hi]
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double g = root_fn(mid, tau);
    if ((g > 0.0) == descending) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void FarModel::validate() const {
  if (l_ant < 3) throw std::invalid_argument("FarModel: need at least 3 antennas");
  if (k_split < 2 || k_split > l_ant - 1) {
    throw std::invalid_argument("FarModel: k_split must lie in {2, ..., L-1}");
  }
}

void SdrModel::validate() const {
  if (l_ant < 3) throw std::invalid_argument("SdrModel: need at least 3 antennas");
  if (!(rho_factor > 0.0)) throw std::invalid_argument("SdrModel: rho_factor must be > 0");
  if (!(beta_norm_sq >= 0.0)) throw std::invalid_argument("SdrModel: beta_norm_sq must be >= 0");
}

double gamma_segment_log(int n, double a, double b, double c) {
  if (n < 0) throw std::invalid_argument("gamma_segment: n must be >= 0");
  if (!(b >= 0.0)) throw std::invalid_argument("gamma_segment: need b >= 0");
  if (b > c) throw std::invalid_argument("gamma_segment: need b <= c");
  if (b == c) return kNegInf;

  const double s = static_cast<double>(n) + 1.0;
  if (a == 0.0) {
    return log_power_diff(b, c, s) - std::log(s);
  }
  if (a > 0.0) {
    // a^{-s} [ Gamma(s, ab) - Gamma(s, ac) ], regularized difference picked
    // from whichever tail keeps the subtraction benign
    const double xb = a * b;
    const double xc = a * c;
    const double pb = boost::math::gamma_p(s, xb);
    double diff;
    if (pb > 0.5) {
      diff = boost::math::gamma_q(s, xb) - boost::math::gamma_q(s, xc);
    } else {
      diff = boost::math::gamma_p(s, xc) - pb;
    }
    if (!(diff > 0.0)) return kNegInf;
    return std::lgamma(s) - s * std::log(a) + std::log(diff);
  }
  // a < 0: expand e^{|a| x}; every term is positive
  const double g = -a;
  LogSum acc;
  double prev = kNegInf;
  const long m_min = static_cast<long>(g * c) + 2;
  for (long m = 0; m < 200000; ++m) {
    const double md = static_cast<double>(m);
    const double lt = md * std::log(g) - std::lgamma(md + 1.0) +
                      log_power_diff(b, c, s + md) - std::log(s + md);
    acc.add(lt);
    if (m > m_min && lt < prev && lt < acc.log() - 42.0) break;
    prev = lt;
  }
  return acc.log();
}

double gamma_segment(int n, double a, double b, double c) {
  return std::exp(gamma_segment_log(n, a, b, c));
}

RootPair fixed_points(double tau) {
  if (!(tau >= 1.0)) {
    throw std::domain_error("fixed_points: e^{x-tau} = x has real roots only for tau >= 1");
  }
  if (tau == 1.0) return {1.0, 1.0};

  RootPair r;
  // q_lo in (0, 1): g decreasing there
  r.q_lo = bisect_root(std::numeric_limits<double>::min(), 1.0, tau, true);
  // q_hi in (1, tau + ln(tau+2) + 2]: g increasing
  double hi = tau + std::log(tau + 2.0) + 2.0;
  r.q_hi = bisect_root(1.0, hi, tau, false);

  // Newton polish on x - ln x - tau (skipped when the slope degenerates)
  for (int it = 0; it < 3; ++it) {
    const double g = root_fn(r.q_hi, tau);
    const double dg = 1.0 - 1.0 / r.q_hi;
    if (dg <= 0.0) break;
    const double next = r.q_hi - g / dg;
    if (!(next >= 1.0 && next <= hi)) break;
    r.q_hi = next;
  }
  return r;
}

double far_cdf(double tau, const FarModel& model) {
  model.validate();
  if (!(tau > 1.0)) return 0.0;
  const RootPair q = fixed_points(tau);
  const int l = model.l_ant;
  const int k = model.k_split;
  const double ld = static_cast<double>(l);

  const double log_pref = ld * std::log(ld) - std::lgamma(static_cast<double>(k)) -
                          std::lgamma(static_cast<double>(l - k));
  const double lg1 = gamma_segment_log(l - 1, ld, q.q_lo, q.q_hi);

  // signed accumulation, scaled by the running max exponent
  double max_log = kNegInf;
  std::vector<std::pair<double, int>> terms;
  terms.reserve(static_cast<size_t>(k));
  for (int j = 0; j <= k - 1; ++j) {
    const double lc = std::lgamma(static_cast<double>(k)) -
                      std::lgamma(static_cast<double>(j) + 1.0) -
                      std::lgamma(static_cast<double>(k - j));
    const double lj = static_cast<double>(l - j - 1);
    const double lg2 = gamma_segment_log(j, static_cast<double>(j) + 1.0, q.q_lo, q.q_hi) -
                       lj * tau;
    const double lbr = log_sub(lg1, lg2) - std::log(lj);
    const double lt = log_pref + lc + lbr;
    const int sign = ((k - 1 - j) % 2 == 0) ? 1 : -1;
    terms.emplace_back(lt, sign);
    max_log = std::max(max_log, lt);
  }
  if (max_log == kNegInf) return 0.0;
  double acc = 0.0;
  for (const auto& [lt, sign] : terms) {
    acc += sign * std::exp(lt - max_log);
  }
  const double value = acc * std::exp(max_log);
  return std::clamp(value, 0.0, 1.0);
}

double far_threshold(double eta, const FarModel& model) {
  model.validate();
  if (!(eta > 0.0 && eta < 1.0)) {
    throw std::invalid_argument("far_threshold: eta must lie in (0,1)");
  }
  const auto ccdf = [&](double tau) { return 1.0 - far_cdf(tau, model); };

  double lo = 1.0;
  double hi = 2.0;
  while (ccdf(hi) > eta) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) break;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted
    const double r = ccdf(mid) - eta;
    if (std::abs(r) <= 1e-9) return mid;
    if (r > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SdrModel build_sdr_model(const GcsKnowledge& gcs, const TerminalProfile& ma_profile, double psi,
                         double sigma_sq, const ArrayGeometry& geom) {
  const int l = geom.total();
  const LinkConstants ma = link_constants(ma_profile, sigma_sq);
  const Eigen::VectorXcd a1_bar =
      steering_vector(geom, ma_profile.direction) / std::sqrt(static_cast<double>(l));
  const double eps0 = std::sqrt(gcs.consts.eps_sq);
  const Eigen::VectorXcd delta =
      (ma.los_amp * std::polar(1.0, psi) * a1_bar - gcs.consts.los_amp * gcs.a0_bar) / eps0;

  const Eigen::MatrixXcd u1 = unitary_completion(a1_bar);
  const Eigen::VectorXcd beta = u1.adjoint() * delta;

  SdrModel model;
  model.l_ant = l;
  model.rho_factor = gcs.consts.eps_sq * static_cast<double>(l) / ma.eps_sq;
  model.beta_norm_sq = beta.squaredNorm();
  model.beta1 = beta[0];
  model.rho_tail = beta.tail(l - 1).norm();
  return model;
}

namespace {

// e^{-z} I_1(z) for z >= 0
double bessel_i1_scaled(double z) {
  if (z < 600.0) {
    return std::cyl_bessel_i(1.0, z) * std::exp(-z);
  }
  // asymptotic tail: I_1(z) e^{-z} = (2 pi z)^{-1/2} sum_k s_k,
  // s_0 = 1, s_k = s_{k-1} * ((2k-1)^2 - 4) / (8 k z)
  double s = 1.0;
  double t = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double tk = 2.0 * k - 1.0;
    t *= (tk * tk - 4.0) / (8.0 * k * z);
    s += t;
  }
  return s / std::sqrt(2.0 * M_PI * z);
}

// log of J_k = integral_{q_lo}^{q_hi} u^{k+L-1} e^{-rho u}
//              ibetac(L-2, k+2, e^{u-tau}/u) du
double log_inner_integral(int k, double tau, int l, double rho, const RootPair& q) {
  const double power = static_cast<double>(k + l - 1);
  const auto phi = [&](double u) { return power * std::log(u) - rho * u; };
  double shift = std::max(phi(q.q_lo), phi(q.q_hi));
  const double u_star = power / rho;
  if (u_star > q.q_lo && u_star < q.q_hi) shift = std::max(shift, phi(u_star));

  const double a_beta = static_cast<double>(l - 2);
  const double b_beta = static_cast<double>(k + 2);
  const auto f = [&](double u) {
    double w0 = std::exp(u - tau) / u;
    if (w0 >= 1.0) return 0.0;  // endpoints, up to roundoff
    if (w0 < 0.0) w0 = 0.0;
    return std::exp(phi(u) - shift) * boost::math::ibetac(a_beta, b_beta, w0);
  };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, q.q_lo, q.q_hi, 12, 1e-10);
  if (!(integral > 0.0)) return kNegInf;
  return shift + std::log(integral);
}

}  // namespace

double noncentral_pdf(double x, const SdrModel& model) {
  model.validate();
  if (!(x > 0.0)) return 0.0;
  const double rho = model.rho_factor;
  if (model.beta_norm_sq <= 0.0) {
    // central limit: Gamma(shape 2, scale 1/rho)
    return rho * rho * x * std::exp(-rho * x);
  }
  const double bnorm = std::sqrt(model.beta_norm_sq);
  const double arg = 2.0 * rho * bnorm * std::sqrt(x);
  const double scaled = bessel_i1_scaled(arg);
  if (!(scaled > 0.0)) return 0.0;
  const double logf = std::log(rho / bnorm) + 0.5 * std::log(x) -
                      rho * (x + model.beta_norm_sq) + arg + std::log(scaled);
  return std::exp(logf);
}

SdrCcdf sdr_ccdf(double tau, const SdrModel& model) {
  model.validate();
  SdrCcdf out;
  if (!(tau > 1.0)) {
    out.value = 1.0;
    return out;
  }
  const RootPair q = fixed_points(tau);
  const int l = model.l_ant;
  const double rho = model.rho_factor;
  const double b2 = model.beta_norm_sq;
  const bool central = !(b2 > 0.0);

  // P{T < tau} = e^{-rho b2} sum_k  rho^{L+2k} b2^k / (k! Gamma(L+k)) * J_k
  // (the beta-normalized form of the double gamma-segment sum; each term is
  // the positive integral of f_X(u-v) f_Y(v) over the transformed region)
  const double base = -rho * b2 + static_cast<double>(l) * std::log(rho);
  LogSum acc;
  double prev = kNegInf;
  int k = 0;
  for (; k < 500; ++k) {
    const double kd = static_cast<double>(k);
    double lt = base + 2.0 * kd * std::log(rho) - std::lgamma(kd + 1.0) -
                std::lgamma(static_cast<double>(l) + kd) +
                log_inner_integral(k, tau, l, rho, q);
    if (k > 0) lt += kd * std::log(b2);
    acc.add(lt);
    if (central) {
      ++k;
      break;
    }
    if (k >= 2 && acc.empty()) {
      // all mass outside the region (tau barely above 1); CCDF is 1
      ++k;
      break;
    }
    const bool tail_small =
        !acc.empty() && (lt == kNegInf || lt - acc.log() < -12.0 * std::log(10.0));
    if (k > 0 && (lt < prev || lt == kNegInf) && tail_small) {
      ++k;
      break;
    }
    prev = lt;
  }
  out.terms = k;
  out.converged = central || k < 500;
  const double cdf = acc.empty() ? 0.0 : std::exp(acc.log());
  out.value = std::clamp(1.0 - cdf, 0.0, 1.0);
  return out;
}

}  // namespace gaa
