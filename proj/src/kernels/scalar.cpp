#include <cmath>

#include "bgev/gev.hpp"
#include "bgev/kernels.hpp"

namespace bgev::kernels::scalar {

LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma) {
  const double log_sigma = std::log(sigma);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (x[i] - mu) / sigma;
    sum += -z - std::exp(-z);
  }
  return {sum - static_cast<double>(n) * log_sigma, 0};
}

LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi) {
  const double log_sigma = std::log(sigma);
  const double inv_xi = 1.0 / xi;
  double sum = 0.0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = xi * (x[i] - mu) / sigma;
    if (w <= -1.0) {
      ++bad;
      continue;
    }
    const double logt = std::log1p(w);
    sum += -(1.0 + inv_xi) * logt - std::exp(-logt * inv_xi);
  }
  return {sum - static_cast<double>(n - bad) * log_sigma, bad};
}

}  // namespace bgev::kernels::scalar
