#pragma once

#include <span>
#include <vector>

#include "bgev/fit.hpp"

namespace bgev {

struct PitReport {
  std::vector<double> values;      // CDF at each observation, in input order
  std::vector<std::size_t> bins;   // equal-width histogram over [0,1]
  double ks_distance;              // sup |ecdf(values) - uniform|
};

// Plug-in probability integral transform under the given fitted model.
PitReport pit(std::span<const double> data, Model model,
              const QuantileParams& params, const BlendConfig& cfg,
              std::size_t n_bins = 10);

// Kolmogorov-Smirnov distance of values in [0,1] to the uniform law.
double ks_uniform_distance(std::span<const double> values);

}  // namespace bgev
