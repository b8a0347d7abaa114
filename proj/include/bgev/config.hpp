#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgev/fit.hpp"

namespace bgev {

// Flat key=value text: one entry per line, '#' starts a comment, blank
// lines ignored. Parse errors carry the line number.
std::map<std::string, std::string> parse_key_value(const std::string& text);
std::map<std::string, std::string> load_key_value_file(const std::string& path);

// Everything a CLI run needs; defaults mirror the application choices
// (alpha=beta=0.5, p_a=0.05, p_b=0.2, c1=c2=5, lambda=7, upper=0.5).
struct RunConfig {
  Model model = Model::kBgev;
  BlendConfig blend;
  bool prior_enabled = false;
  double prior_lambda = 7.0;
  double prior_upper = 0.5;
  OptimiserSettings optimiser;
  std::uint64_t seed = 1;

  // Overwrites fields present in the map; unknown keys throw.
  void apply(const std::map<std::string, std::string>& kv);
};

// Reads a single-column CSV of observations (optional header row).
// Throws std::runtime_error naming the offending line on parse failure.
std::vector<double> read_data_csv(const std::string& path);

// Reads fitted parameters from a key=value block as written by
// FitResult::to_key_value.
struct ParamsFile {
  Model model;
  QuantileParams params;
  BlendConfig cfg;
};
ParamsFile read_params_file(const std::string& path);

}  // namespace bgev
