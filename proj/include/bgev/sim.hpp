#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgev/fit.hpp"

namespace bgev {

enum class Study { kStudy1, kStudy2, kStudy3, kDemo };

struct SimCell {
  std::string key;
  std::string metric;   // "rmse" or "rmse_diff"
  double value;         // reported value (study 1 rounds to 2 decimals)
  double raw;           // unrounded value
  std::size_t replicates;
  std::size_t failures;     // non-converged fits (best point still used)
  bool unreliable = false;  // > 5% failed replicates
  bool skipped = false;
  std::string skip_reason;
};

struct SimReport {
  Study study;
  std::uint64_t master_seed;
  std::size_t replicates;
  std::vector<SimCell> cells;
  std::string notes;

  // Header: study,cell_key,metric,value,replicates,seed
  std::string to_csv() const;
  std::string to_table() const;
};

// Block maxima of Frechet(0,1,alpha_f) samples, fitted with GEV and bGEV
// under identical data/start values; reports RMSE_GEV - RMSE_bGEV of the
// T-block return level against the exact maxima distribution.
struct Study1Spec {
  std::vector<std::size_t> block_sizes = {30, 50, 100, 500};
  std::vector<std::size_t> n_maxima = {30, 50, 100, 500, 1000};
  std::vector<double> return_periods = {30, 50, 100};
  double alpha_f = 10.0;
  std::size_t replicates = 500;
};
SimReport study1(const Study1Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings = {});

// Sensitivity of the bGEV fit to (p_a, p_b, c1=c2); data are direct GEV
// draws with mu=0, sigma=1, xi=0.1 and the target is the 50-block return
// level. Includes a GEV-fit baseline cell.
struct Study2Spec {
  std::vector<double> p_a = {0.05, 0.1, 0.15};
  std::vector<double> p_b = {0.2, 0.25, 0.3};
  std::vector<double> c = {3, 5};
  std::size_t n_maxima = 100;
  double return_period = 50;
  std::size_t replicates = 500;
};
SimReport study2(const Study2Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings = {});

// Sensitivity to the quantile probabilities (alpha, beta); same data
// generation and target as study 2.
struct Study3Spec {
  std::vector<double> alpha = {0.3, 0.5, 0.7, 0.9};
  std::vector<double> beta = {0.5, 0.7, 0.9};
  std::size_t n_maxima = 100;
  double return_period = 50;
  std::size_t replicates = 500;
};
SimReport study3(const Study3Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings = {});

// Standardised Cauchy block maxima M_n/(n/pi): their finite-n law keeps
// positive mass below zero while converging to the unit Frechet limit.
struct DemoSpec {
  std::vector<std::size_t> block_sizes = {10, 100, 1000, 10000};
  std::size_t replicates = 100000;
};
struct DemoRow {
  std::size_t n;
  double mass_below_zero;   // empirical P(M_n* < 0)
  double exact_mass;        // 2^{-n}
  double sup_distance;      // grid sup-distance to exp(-1/z)
};
struct DemoReport {
  std::uint64_t master_seed;
  std::size_t replicates;
  std::vector<DemoRow> rows;
  std::string to_csv() const;
};
DemoReport demo_cauchy(const DemoSpec& spec, std::uint64_t master_seed);

}  // namespace bgev
