#include "bgev/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bgev/numerics.hpp"

namespace bgev {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

double pc_log_density(double xi, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("pc prior: lambda must be positive");
  if (!(xi >= 0.0 && xi < 1.0))
    throw std::domain_error("pc prior: xi outside [0,1)");
  const double rate = lambda * kInvSqrt2;
  const double one_m = 1.0 - xi;
  return std::log(rate) - rate * xi / std::sqrt(one_m) +
         std::log1p(-0.5 * xi) - 1.5 * std::log(one_m);
}

double pc_density(double xi, double lambda) {
  return std::exp(pc_log_density(xi, lambda));
}

PcPrior PcPrior::make(double lambda, double upper) {
  if (!(lambda > 0.0)) throw std::domain_error("pc prior: lambda must be positive");
  if (!(upper > 0.0 && upper <= 1.0))
    throw std::domain_error("pc prior: upper must lie in (0,1]");
  double z;
  if (upper == 1.0) {
    z = 1.0;  // the density is normalised on [0,1) by construction
  } else {
    z = integrate([lambda](double s) { return pc_density(s, lambda); }, 0.0,
                  upper, 1e-12);
  }
  return {lambda, upper, std::log(z)};
}

double p3c_log_density(double xi, const PcPrior& prior) {
  if (xi < 0.0 || xi >= prior.upper)
    return -std::numeric_limits<double>::infinity();
  return pc_log_density(xi, prior.lambda) - prior.log_norm;
}

double p3c_density(double xi, const PcPrior& prior) {
  if (xi < 0.0 || xi >= prior.upper) return 0.0;
  return std::exp(p3c_log_density(xi, prior));
}

}  // namespace bgev
