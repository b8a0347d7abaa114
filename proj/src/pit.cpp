#include "bgev/pit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bgev/blend.hpp"

namespace bgev {

double ks_uniform_distance(std::span<const double> values) {
  if (values.empty())
    throw std::invalid_argument("ks_uniform_distance: empty input");
  std::vector<double> u(values.begin(), values.end());
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - u[i]);
    d = std::max(d, u[i] - static_cast<double>(i) / n);
  }
  return d;
}

PitReport pit(std::span<const double> data, Model model,
              const QuantileParams& params, const BlendConfig& cfg,
              std::size_t n_bins) {
  if (data.empty()) throw std::invalid_argument("pit: empty data");
  if (n_bins == 0) throw std::invalid_argument("pit: need at least one bin");

  PitReport rep;
  rep.values.reserve(data.size());
  if (model == Model::kGev) {
    for (const double x : data) rep.values.push_back(gev_cdf_q(x, params));
  } else {
    const Blend bl = make_blend(params, cfg);
    for (const double x : data) rep.values.push_back(bgev_cdf(x, bl));
  }

  rep.bins.assign(n_bins, 0);
  for (const double u : rep.values) {
    auto k = static_cast<std::size_t>(u * static_cast<double>(n_bins));
    if (k >= n_bins) k = n_bins - 1;
    ++rep.bins[k];
  }
  rep.ks_distance = ks_uniform_distance(rep.values);
  return rep;
}

}  // namespace bgev
