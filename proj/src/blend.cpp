#include "bgev/blend.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bgev/rng.hpp"

namespace bgev {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// -log CDF, i.e. the exponent t with CDF = exp(-t).
double neg_log_cdf(double x, const ClassicParams& p) {
  if (p.xi == 0.0) return std::exp(-(x - p.mu) / p.sigma);
  const double w = p.xi * (x - p.mu) / p.sigma;
  if (w <= -1.0) return p.xi > 0.0 ? kInf : 0.0;
  return std::exp(-std::log1p(w) / p.xi);
}

// Pieces entering the blended density on (a, b):
//   rf  = f/F, the hazard-style ratio of the Frechet component
//   drf, d2rf = its first two derivatives in x (and same for the Gumbel).
struct Ratio {
  double r;
  double dr;
  double d2r;
};

Ratio frechet_ratio(double x, const ClassicParams& p) {
  const double u = 1.0 + p.xi * (x - p.mu) / p.sigma;
  const double upow = std::exp(-(1.0 + 1.0 / p.xi) * std::log(u));
  const double r = upow / p.sigma;
  const double dr = -(1.0 + p.xi) * upow / (u * p.sigma * p.sigma);
  const double d2r = (1.0 + p.xi) * (1.0 + 2.0 * p.xi) * upow /
                     (u * u * p.sigma * p.sigma * p.sigma);
  return {r, dr, d2r};
}

Ratio gumbel_ratio(double x, const ClassicParams& p) {
  const double e = std::exp(-(x - p.mu) / p.sigma);
  return {e / p.sigma, -e / (p.sigma * p.sigma),
          e / (p.sigma * p.sigma * p.sigma)};
}

PdfDerivs gumbel_pdf_derivs(double x, const ClassicParams& p) {
  const double z = (x - p.mu) / p.sigma;
  const double e = std::exp(-z);
  const double g = std::exp(-std::log(p.sigma) - z - e);
  const double dg = g * (e - 1.0) / p.sigma;
  const double d2g = g * ((e - 1.0) * (e - 1.0) - e) / (p.sigma * p.sigma);
  return {g, dg, d2g};
}

PdfDerivs gev_pdf_derivs(double x, const ClassicParams& p) {
  const double w = p.xi * (x - p.mu) / p.sigma;
  if (w <= -1.0) return {0.0, 0.0, 0.0};
  const double u = 1.0 + w;
  const double logu = std::log(u);
  const double t = std::exp(-logu / p.xi);
  const double f =
      std::exp(-std::log(p.sigma) - (1.0 + 1.0 / p.xi) * logu - t);
  const double psi = (-(1.0 + p.xi) + t) / (u * p.sigma);
  const double dpsi = (1.0 + p.xi) * (p.xi - t) / (u * u * p.sigma * p.sigma);
  return {f, f * psi, f * (psi * psi + dpsi)};
}
}  // namespace

void validate_blend_config(const BlendConfig& cfg, bool strict) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw std::invalid_argument("blend config: alpha must lie in (0,1)");
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0))
    throw std::invalid_argument("blend config: beta must lie in (0,1)");
  if (!(cfg.p_a > 0.0 && cfg.p_b < 1.0 && cfg.p_a < cfg.p_b))
    throw std::invalid_argument("blend config: need 0 < p_a < p_b < 1");
  if (!(cfg.weights.c1 > 0.0 && cfg.weights.c2 > 0.0))
    throw std::invalid_argument("blend config: c1 and c2 must be positive");
  if (strict) {
    if (cfg.p_b > std::min(cfg.alpha, 0.5 * cfg.beta))
      throw std::invalid_argument(
          "blend config: p_b must satisfy p_b <= min(alpha, beta/2)");
    if (!(cfg.weights.c1 > 3.0 && cfg.weights.c2 > 3.0))
      throw std::invalid_argument("blend config: c1 and c2 must exceed 3");
  }
}

BlendDerived derive_blend(const QuantileParams& qp, const BlendConfig& cfg) {
  validate_blend_config(cfg, false);
  if (qp.xi < 0.0) throw std::domain_error("derive_blend: xi must be >= 0");

  const ClassicParams f = to_classic(qp);
  const double a = gev_quantile(cfg.p_a, f);
  const double b = gev_quantile(cfg.p_b, f);

  const double la = log_neg_log(cfg.alpha);
  const double lpa = log_neg_log(cfg.p_a);
  const double lpb = log_neg_log(cfg.p_b);
  const double q_tilde = a - (b - a) * (la - lpa) / (lpa - lpb);
  const double s_tilde =
      (b - a) * gumbel_quantile_span(cfg.beta) / (lpa - lpb);
  return {a, b, q_tilde, s_tilde};
}

double weight(double x, const BlendDerived& d, const BetaShape& shape) {
  if (x <= d.a) return 0.0;
  if (x >= d.b) return 1.0;
  return reg_inc_beta((x - d.a) / (d.b - d.a), shape);
}

Blend make_blend(const QuantileParams& qp, const BlendConfig& cfg) {
  Blend bl;
  bl.qp = qp;
  bl.qp.alpha = cfg.alpha;
  bl.qp.beta = cfg.beta;
  bl.cfg = cfg;
  bl.xi_zero = std::fabs(qp.xi) < kXiZeroEps;
  bl.d = derive_blend(bl.qp, cfg);
  bl.frechet = to_classic(bl.qp);
  // Gumbel-match parameters expressed in location/scale form.
  const double sigma_g = bl.d.s_tilde / gumbel_quantile_span(cfg.beta);
  bl.gumbel = {bl.d.q_tilde + sigma_g * log_neg_log(cfg.alpha), sigma_g, 0.0};
  return bl;
}

double bgev_cdf(double x, const Blend& bl) {
  if (bl.xi_zero || x <= bl.d.a) return gev_cdf(x, bl.gumbel);
  if (x >= bl.d.b) return gev_cdf(x, bl.frechet);
  const double p = reg_inc_beta((x - bl.d.a) / (bl.d.b - bl.d.a),
                                bl.cfg.weights);
  const double t1 = neg_log_cdf(x, bl.frechet);
  const double t2 = neg_log_cdf(x, bl.gumbel);
  return std::exp(-(p * t1 + (1.0 - p) * t2));
}

double bgev_log_pdf(double x, const Blend& bl) {
  if (bl.xi_zero || x <= bl.d.a) return gev_log_pdf(x, bl.gumbel);
  if (x >= bl.d.b) return gev_log_pdf(x, bl.frechet);

  const double width = bl.d.b - bl.d.a;
  const double y = (x - bl.d.a) / width;
  const double p = reg_inc_beta(y, bl.cfg.weights);
  const double pd = beta_pdf_and_derivs(y, bl.cfg.weights).f / width;
  const double t1 = neg_log_cdf(x, bl.frechet);
  const double t2 = neg_log_cdf(x, bl.gumbel);
  const double rf = frechet_ratio(x, bl.frechet).r;
  const double rg = gumbel_ratio(x, bl.gumbel).r;
  // m = p' (log F - log G) + p f/F + (1-p) g/G, h = H m.
  const double m = pd * (t2 - t1) + p * rf + (1.0 - p) * rg;
  const double log_h = -(p * t1 + (1.0 - p) * t2) + std::log(m);
  return log_h;
}

double bgev_pdf(double x, const Blend& bl) {
  return std::exp(bgev_log_pdf(x, bl));
}

PdfDerivs bgev_pdf_derivs(double x, const Blend& bl) {
  if (bl.xi_zero || x <= bl.d.a) return gumbel_pdf_derivs(x, bl.gumbel);
  if (x >= bl.d.b) return gev_pdf_derivs(x, bl.frechet);

  const double width = bl.d.b - bl.d.a;
  const double y = (x - bl.d.a) / width;
  const double p = reg_inc_beta(y, bl.cfg.weights);
  const BetaPdfDerivs bp = beta_pdf_and_derivs(y, bl.cfg.weights);
  const double pd1 = bp.f / width;
  const double pd2 = bp.df / (width * width);
  const double pd3 = bp.d2f / (width * width * width);

  const double t1 = neg_log_cdf(x, bl.frechet);
  const double t2 = neg_log_cdf(x, bl.gumbel);
  const Ratio rf = frechet_ratio(x, bl.frechet);
  const Ratio rg = gumbel_ratio(x, bl.gumbel);

  const double big_l = t2 - t1;  // log F - log G
  const double m = pd1 * big_l + p * rf.r + (1.0 - p) * rg.r;
  const double dm = pd2 * big_l + 2.0 * pd1 * (rf.r - rg.r) + p * rf.dr +
                    (1.0 - p) * rg.dr;
  const double d2m = pd3 * big_l + 3.0 * pd2 * (rf.r - rg.r) +
                     3.0 * pd1 * (rf.dr - rg.dr) + p * rf.d2r +
                     (1.0 - p) * rg.d2r;

  const double big_h = std::exp(-(p * t1 + (1.0 - p) * t2));
  const double h = big_h * m;
  const double dh = h * m + big_h * dm;
  const double d2h = dh * m + 2.0 * h * dm + big_h * d2m;
  return {h, dh, d2h};
}

double bgev_quantile(double p, const Blend& bl) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("bgev_quantile: probability outside (0,1)");
  if (bl.xi_zero || p <= bl.cfg.p_a) return gev_quantile(p, bl.gumbel);
  if (p >= bl.cfg.p_b) return gev_quantile(p, bl.frechet);
  const double tol = 1e-13 * (std::fabs(bl.d.a) + std::fabs(bl.d.b) + 1.0);
  return find_root([&](double x) { return bgev_cdf(x, bl) - p; }, bl.d.a,
                   bl.d.b, tol);
}

std::vector<double> bgev_sample(std::size_t n, const Blend& bl,
                                std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(bgev_quantile(rng.uniform_at(i), bl));
  return out;
}

double bgev_cdf(double x, const QuantileParams& qp, const BlendConfig& cfg) {
  return bgev_cdf(x, make_blend(qp, cfg));
}
double bgev_pdf(double x, const QuantileParams& qp, const BlendConfig& cfg) {
  return bgev_pdf(x, make_blend(qp, cfg));
}
double bgev_log_pdf(double x, const QuantileParams& qp,
                    const BlendConfig& cfg) {
  return bgev_log_pdf(x, make_blend(qp, cfg));
}
PdfDerivs bgev_pdf_derivs(double x, const QuantileParams& qp,
                          const BlendConfig& cfg) {
  return bgev_pdf_derivs(x, make_blend(qp, cfg));
}
double bgev_quantile(double p, const QuantileParams& qp,
                     const BlendConfig& cfg) {
  return bgev_quantile(p, make_blend(qp, cfg));
}
std::vector<double> bgev_sample(std::size_t n, const QuantileParams& qp,
                                const BlendConfig& cfg, std::uint64_t seed) {
  return bgev_sample(n, make_blend(qp, cfg), seed);
}

}  // namespace bgev
