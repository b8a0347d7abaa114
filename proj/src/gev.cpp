#include "bgev/gev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bgev/rng.hpp"

namespace bgev {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_classic(const ClassicParams& p) {
  if (!(p.sigma > 0.0)) throw std::domain_error("gev: sigma must be positive");
}

void check_quantile(const QuantileParams& qp) {
  if (!(qp.s_beta > 0.0)) throw std::domain_error("gev: s_beta must be positive");
  if (!(qp.alpha > 0.0 && qp.alpha < 1.0))
    throw std::domain_error("gev: alpha must lie in (0,1)");
  if (!(qp.beta > 0.0 && qp.beta < 1.0))
    throw std::domain_error("gev: beta must lie in (0,1)");
}

// l_{1-beta/2,xi} - l_{beta/2,xi}; for |xi| ~ 0 use the xi=0 limit scaled
// by xi, i.e. Delta/xi -> l_{beta/2} - l_{1-beta/2}.
double ell_delta(double beta, double xi) {
  return ell_m1(1.0 - 0.5 * beta, xi) - ell_m1(0.5 * beta, xi);
}
}  // namespace

double gumbel_quantile_span(double beta) {
  return log_neg_log(0.5 * beta) - log_neg_log(1.0 - 0.5 * beta);
}

double log_neg_log(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("log_neg_log: argument outside (0,1)");
  return std::log(-std::log(a));
}

double ell_m1(double a, double xi) { return std::expm1(-xi * log_neg_log(a)); }

ClassicParams to_classic(const QuantileParams& qp) {
  check_quantile(qp);
  if (std::fabs(qp.xi) < kXiZeroEps) {
    const double sigma = qp.s_beta / gumbel_quantile_span(qp.beta);
    const double mu = qp.q_alpha + sigma * log_neg_log(qp.alpha);
    return {mu, sigma, 0.0};
  }
  const double delta = ell_delta(qp.beta, qp.xi);
  const double sigma = qp.xi * qp.s_beta / delta;
  const double mu = qp.q_alpha - qp.s_beta * ell_m1(qp.alpha, qp.xi) / delta;
  return {mu, sigma, qp.xi};
}

QuantileParams to_quantile(const ClassicParams& p, double alpha, double beta) {
  check_classic(p);
  QuantileParams qp;
  qp.xi = p.xi;
  qp.alpha = alpha;
  qp.beta = beta;
  if (std::fabs(p.xi) < kXiZeroEps) {
    qp.s_beta = p.sigma * gumbel_quantile_span(beta);
    qp.q_alpha = p.mu - p.sigma * log_neg_log(alpha);
  } else {
    qp.s_beta = p.sigma * ell_delta(beta, p.xi) / p.xi;
    qp.q_alpha = p.mu + p.sigma * ell_m1(alpha, p.xi) / p.xi;
  }
  check_quantile(qp);
  return qp;
}

double gev_cdf(double x, const ClassicParams& p) {
  check_classic(p);
  if (std::fabs(p.xi) < kXiZeroEps) {
    const double z = (x - p.mu) / p.sigma;
    return std::exp(-std::exp(-z));
  }
  const double w = p.xi * (x - p.mu) / p.sigma;
  if (w <= -1.0) return p.xi > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::exp(-std::log1p(w) / p.xi));
}

double gev_log_pdf(double x, const ClassicParams& p) {
  check_classic(p);
  if (std::fabs(p.xi) < kXiZeroEps) {
    const double z = (x - p.mu) / p.sigma;
    return -std::log(p.sigma) - z - std::exp(-z);
  }
  const double w = p.xi * (x - p.mu) / p.sigma;
  if (w <= -1.0) return -kInf;
  const double logt = std::log1p(w);
  return -std::log(p.sigma) - (1.0 + 1.0 / p.xi) * logt -
         std::exp(-logt / p.xi);
}

double gev_pdf(double x, const ClassicParams& p) {
  return std::exp(gev_log_pdf(x, p));
}

double gev_quantile(double p, const ClassicParams& params) {
  check_classic(params);
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("gev_quantile: probability outside (0,1)");
  if (std::fabs(params.xi) < kXiZeroEps)
    return params.mu - params.sigma * log_neg_log(p);
  return params.mu + params.sigma * ell_m1(p, params.xi) / params.xi;
}

double gev_cdf_q(double x, const QuantileParams& qp) {
  return gev_cdf(x, to_classic(qp));
}

double gev_pdf_q(double x, const QuantileParams& qp) {
  return gev_pdf(x, to_classic(qp));
}

double gev_quantile_q(double p, const QuantileParams& qp) {
  check_quantile(qp);
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("gev_quantile_q: probability outside (0,1)");
  if (std::fabs(qp.xi) < kXiZeroEps)
    return qp.q_alpha +
           qp.s_beta * (log_neg_log(qp.alpha) - log_neg_log(p)) /
               gumbel_quantile_span(qp.beta);
  return qp.q_alpha + qp.s_beta *
                          (ell_m1(p, qp.xi) - ell_m1(qp.alpha, qp.xi)) /
                          ell_delta(qp.beta, qp.xi);
}

std::vector<double> gev_sample(std::size_t n, const QuantileParams& qp,
                               std::uint64_t seed) {
  check_quantile(qp);
  CounterRng rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(gev_quantile_q(rng.uniform_at(i), qp));
  return out;
}

ClassicParams frechet_params(double location, double scale, double alpha) {
  if (!(scale > 0.0) || !(alpha > 0.0))
    throw std::domain_error("frechet_params: scale and alpha must be positive");
  return {location + scale, scale / alpha, 1.0 / alpha};
}

ClassicParams frechet_block_max_params(std::size_t n, double alpha_f) {
  if (n < 1) throw std::domain_error("frechet_block_max_params: n must be >= 1");
  const double scale = std::pow(static_cast<double>(n), 1.0 / alpha_f);
  return frechet_params(0.0, scale, alpha_f);
}

}  // namespace bgev
