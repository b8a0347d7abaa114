#include "bgev/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bgev {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: value for '" + key +
                             "' is not a number: '" + value + "'");
  }
  if (pos != value.size())
    throw std::runtime_error("config: value for '" + key +
                             "' is not a number: '" + value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  std::uint64_t v;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: value for '" + key +
                             "' is not a nonnegative integer: '" + value + "'");
  }
  if (pos != value.size())
    throw std::runtime_error("config: value for '" + key +
                             "' is not a nonnegative integer: '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw std::runtime_error("config: value for '" + key +
                           "' must be 0/1/true/false, got '" + value + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_value(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected key=value, got '" + t + "'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": empty key");
    if (kv.count(key))
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> load_key_value_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  try {
    return parse_key_value(os.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void RunConfig::apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "model") {
      if (value == "gev")
        model = Model::kGev;
      else if (value == "bgev")
        model = Model::kBgev;
      else
        throw std::runtime_error("config: model must be gev or bgev, got '" +
                                 value + "'");
    } else if (key == "alpha") {
      blend.alpha = parse_double(key, value);
    } else if (key == "beta") {
      blend.beta = parse_double(key, value);
    } else if (key == "p_a") {
      blend.p_a = parse_double(key, value);
    } else if (key == "p_b") {
      blend.p_b = parse_double(key, value);
    } else if (key == "c1") {
      blend.weights.c1 = parse_double(key, value);
    } else if (key == "c2") {
      blend.weights.c2 = parse_double(key, value);
    } else if (key == "prior_enabled") {
      prior_enabled = parse_bool(key, value);
    } else if (key == "prior_lambda") {
      prior_lambda = parse_double(key, value);
    } else if (key == "prior_upper") {
      prior_upper = parse_double(key, value);
    } else if (key == "seed") {
      seed = parse_u64(key, value);
    } else if (key == "max_iter") {
      optimiser.max_iter = static_cast<int>(parse_u64(key, value));
    } else if (key == "x_tol") {
      optimiser.x_tol = parse_double(key, value);
    } else if (key == "f_tol") {
      optimiser.f_tol = parse_double(key, value);
    } else if (key == "restarts") {
      optimiser.restarts = static_cast<int>(parse_u64(key, value));
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
  }
}

std::vector<double> read_data_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<double> data;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = line;
    if (!t.empty() && t.back() == '\r') t.pop_back();
    const auto b = t.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = t.find_last_not_of(" \t");
    t = t.substr(b, e - b + 1);
    std::size_t pos = 0;
    double v = 0.0;
    bool ok = true;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok && pos != t.size()) ok = false;
    if (!ok) {
      // A single non-numeric header row is tolerated.
      if (first) {
        first = false;
        continue;
      }
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               ": not a number: '" + t + "'");
    }
    if (!std::isfinite(v))
      throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                               ": non-finite value");
    data.push_back(v);
    first = false;
  }
  return data;
}

ParamsFile read_params_file(const std::string& path) {
  const auto kv = load_key_value_file(path);
  ParamsFile pf;
  auto require = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw std::runtime_error(path + ": missing key '" + std::string(key) +
                               "'");
    return it->second;
  };
  const std::string& m = require("model");
  if (m == "gev")
    pf.model = Model::kGev;
  else if (m == "bgev")
    pf.model = Model::kBgev;
  else
    throw std::runtime_error(path + ": model must be gev or bgev");
  pf.params.q_alpha = parse_double("q_alpha", require("q_alpha"));
  pf.params.s_beta = parse_double("s_beta", require("s_beta"));
  pf.params.xi = parse_double("xi", require("xi"));
  pf.params.alpha = parse_double("alpha", require("alpha"));
  pf.params.beta = parse_double("beta", require("beta"));
  pf.cfg.alpha = pf.params.alpha;
  pf.cfg.beta = pf.params.beta;
  if (pf.model == Model::kBgev) {
    pf.cfg.p_a = parse_double("p_a", require("p_a"));
    pf.cfg.p_b = parse_double("p_b", require("p_b"));
    pf.cfg.weights.c1 = parse_double("c1", require("c1"));
    pf.cfg.weights.c2 = parse_double("c2", require("c2"));
  }
  return pf;
}

}  // namespace bgev
