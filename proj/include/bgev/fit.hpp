#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bgev/blend.hpp"
#include "bgev/gev.hpp"
#include "bgev/prior.hpp"

namespace bgev {

enum class Model { kGev, kBgev };

struct OptimiserSettings {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  int max_iter = 5000;
  double x_tol = 1e-8;
  double f_tol = 1e-8;
  int restarts = 1;
};

struct NmResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
  std::vector<double> trace;  // best value per iteration, nonincreasing
};

// Minimises f. Infinite values are handled as "worst vertex"; the start
// must evaluate finite (std::invalid_argument otherwise).
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> start,
                     const OptimiserSettings& settings = {});

// Sum of log-densities; -inf when an observation lies outside the GEV
// support. Empty data throws std::invalid_argument.
double loglik_gev(std::span<const double> data, const QuantileParams& qp);
// bGEV log-likelihood; finite for all finite data (support is the real
// line). Requires qp.xi >= 0.
double loglik_bgev(std::span<const double> data, const QuantileParams& qp,
                   const BlendConfig& cfg);

struct FitResult {
  QuantileParams params;
  ClassicParams classic;
  double objective;  // attained log-likelihood or log-posterior
  int iterations;
  bool converged;
  Model model;
  BlendConfig cfg;
  bool penalised;

  std::string to_key_value() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

// Maximum-likelihood (or, with a prior, penalised/MAP) fit over the
// unconstrained vector (q_alpha, log s_beta, xi-transform).
FitResult fit(std::span<const double> data, Model model, const BlendConfig& cfg,
              const std::optional<PcPrior>& prior = std::nullopt,
              const OptimiserSettings& settings = {});

// (1 - 1/T)-quantile of the fitted distribution; T > 1.
double return_level(const FitResult& fr, double T);

// Type-7 empirical quantile of already sorted data.
double empirical_quantile(std::span<const double> sorted, double p);

}  // namespace bgev
