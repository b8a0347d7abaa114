#pragma once

namespace bgev {

// Penalised complexity prior for a nonnegative shape parameter, with the
// Gumbel model (xi = 0) as base. The density lives on [0,1); truncating at
// `upper` = 0.5 preserves the first two moments of the fitted distribution.
struct PcPrior {
  double lambda;
  double upper;
  double log_norm;  // log of the truncation normaliser, fixed at build time

  // Computes the normaliser by adaptive quadrature; lambda > 0,
  // 0 < upper <= 1.
  static PcPrior make(double lambda, double upper = 0.5);
};

// Untruncated density pi(xi; lambda) on [0,1). Throws std::domain_error
// outside that interval.
double pc_density(double xi, double lambda);
double pc_log_density(double xi, double lambda);

// Truncated, renormalised density: pi(xi)/Z on [0, upper), 0 elsewhere.
double p3c_density(double xi, const PcPrior& prior);
double p3c_log_density(double xi, const PcPrior& prior);  // -inf outside

}  // namespace bgev
