#pragma once

#include <cstdint>
#include <vector>

namespace bgev {

// Location/scale/shape parametrisation of the GEV family.
struct ClassicParams {
  double mu;
  double sigma;  // > 0
  double xi;
};

// Quantile-based parametrisation: location is the alpha-quantile q_alpha,
// spread is the quantile range s_beta = q_{1-beta/2} - q_{beta/2}.
struct QuantileParams {
  double q_alpha;
  double s_beta;  // > 0
  double xi;
  double alpha = 0.5;
  double beta = 0.5;
};

// Shape magnitudes below this threshold are routed to the Gumbel branch.
inline constexpr double kXiZeroEps = 1e-8;

// l_a = log(-log a) for a in (0,1).
double log_neg_log(double a);

// l_{beta/2} - l_{1-beta/2}; the (positive) quantile span of a unit Gumbel
// between the beta/2 and 1-beta/2 probabilities.
double gumbel_quantile_span(double beta);

// l_{a,xi} - 1 = expm1(-xi * log(-log a)); keeps full relative precision
// as xi -> 0, where (-log a)^{-xi} -> 1.
double ell_m1(double a, double xi);

ClassicParams to_classic(const QuantileParams& qp);
QuantileParams to_quantile(const ClassicParams& p, double alpha, double beta);

double gev_cdf(double x, const ClassicParams& p);
double gev_pdf(double x, const ClassicParams& p);
double gev_log_pdf(double x, const ClassicParams& p);  // -inf outside support
double gev_quantile(double p, const ClassicParams& params);

double gev_cdf_q(double x, const QuantileParams& qp);
double gev_pdf_q(double x, const QuantileParams& qp);
double gev_quantile_q(double p, const QuantileParams& qp);

// Inverse-CDF sampling with a counter-based stream; deterministic per seed.
std::vector<double> gev_sample(std::size_t n, const QuantileParams& qp,
                               std::uint64_t seed);

// Exact distribution of the maximum of n iid Frechet(0, 1, alpha_f) draws:
// Frechet with location 0, scale n^{1/alpha_f}, shape alpha_f, expressed in
// GEV form via xi = 1/alpha_f.
ClassicParams frechet_block_max_params(std::size_t n, double alpha_f);

// Frechet(location, scale, alpha) as GEV: mu = location + scale,
// sigma = scale/alpha, xi = 1/alpha.
ClassicParams frechet_params(double location, double scale, double alpha);

}  // namespace bgev
