#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgev/blend.hpp"
#include "bgev/config.hpp"
#include "bgev/fit.hpp"
#include "bgev/pit.hpp"
#include "bgev/prior.hpp"
#include "bgev/sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConverge = 2;

// Flag values held as optionals so that config precedence is
// flag > config file > built-in default.
struct Flags {
  std::optional<std::string> model;
  std::optional<double> alpha, beta, pa, pb, c1, c2;
  std::optional<double> prior_lambda, prior_upper;
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::string out_path;
  bool fast = false;
};

void add_common_flags(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--model", fl.model, "Model: gev or bgev");
  cmd->add_option("--alpha", fl.alpha, "Location quantile probability");
  cmd->add_option("--beta", fl.beta, "Spread quantile probability");
  cmd->add_option("--pa", fl.pa, "Lower mixing probability p_a");
  cmd->add_option("--pb", fl.pb, "Upper mixing probability p_b");
  cmd->add_option("--c1", fl.c1, "First Beta weight shape");
  cmd->add_option("--c2", fl.c2, "Second Beta weight shape");
  cmd->add_option("--prior-lambda", fl.prior_lambda, "Shape-prior rate");
  cmd->add_option("--prior-upper", fl.prior_upper,
                  "Shape-prior truncation point");
  cmd->add_option("--seed", fl.seed, "Master RNG seed");
  cmd->add_option("--config", fl.config_path, "key=value config file");
  cmd->add_option("--out", fl.out_path, "Output file (default stdout)");
}

bgev::RunConfig resolve_config(const Flags& fl) {
  bgev::RunConfig rc;
  std::string path = fl.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("BGEV_CONFIG")) path = env;
  }
  if (!path.empty()) rc.apply(bgev::load_key_value_file(path));
  // Flags win over config-file entries.
  std::map<std::string, std::string> kv;
  auto put = [&kv](const char* key, const auto& opt) {
    if (opt) {
      std::ostringstream os;
      os.precision(17);
      os << *opt;
      kv[key] = os.str();
    }
  };
  if (fl.model) kv["model"] = *fl.model;
  put("alpha", fl.alpha);
  put("beta", fl.beta);
  put("p_a", fl.pa);
  put("p_b", fl.pb);
  put("c1", fl.c1);
  put("c2", fl.c2);
  put("prior_lambda", fl.prior_lambda);
  put("prior_upper", fl.prior_upper);
  put("seed", fl.seed);
  if (fl.prior_lambda || fl.prior_upper) kv["prior_enabled"] = "1";
  rc.apply(kv);
  return rc;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int cmd_fit(const Flags& fl, const std::string& data_path) {
  const bgev::RunConfig rc = resolve_config(fl);
  const std::vector<double> data = bgev::read_data_csv(data_path);
  if (data.empty()) throw std::runtime_error(data_path + ": no observations");
  if (data.size() < 5)
    throw std::runtime_error(data_path + ": need at least 5 observations, got " +
                             std::to_string(data.size()));
  std::optional<bgev::PcPrior> prior;
  if (rc.prior_enabled) {
    if (rc.model != bgev::Model::kBgev)
      throw std::runtime_error("the shape prior applies to the bgev model only");
    prior = bgev::PcPrior::make(rc.prior_lambda, rc.prior_upper);
  }
  const bgev::FitResult fr =
      bgev::fit(data, rc.model, rc.blend, prior, rc.optimiser);
  write_output(fl.out_path, fr.to_key_value());
  return fr.converged ? kExitOk : kExitNoConverge;
}

int cmd_sample(const Flags& fl, const std::string& params_path,
               std::size_t count) {
  const bgev::RunConfig rc = resolve_config(fl);
  const bgev::ParamsFile pf = bgev::read_params_file(params_path);
  std::vector<double> xs;
  if (pf.model == bgev::Model::kGev)
    xs = bgev::gev_sample(count, pf.params, rc.seed);
  else
    xs = bgev::bgev_sample(count, pf.params, pf.cfg, rc.seed);
  std::ostringstream os;
  os.precision(17);
  os << "value\n";
  for (const double x : xs) os << x << '\n';
  write_output(fl.out_path, os.str());
  return kExitOk;
}

int cmd_rl(const Flags& fl, const std::string& params_path,
           const std::vector<double>& periods) {
  const bgev::ParamsFile pf = bgev::read_params_file(params_path);
  if (periods.empty()) throw std::runtime_error("no return periods given");
  std::ostringstream os;
  os.precision(17);
  os << "T,level\n";
  for (const double T : periods) {
    if (!(T > 1.0))
      throw std::runtime_error("return period must exceed 1, got " +
                               std::to_string(T));
    const double p = 1.0 - 1.0 / T;
    const double z = pf.model == bgev::Model::kGev
                         ? bgev::gev_quantile_q(p, pf.params)
                         : bgev::bgev_quantile(p, pf.params, pf.cfg);
    os << T << ',' << z << '\n';
  }
  write_output(fl.out_path, os.str());
  return kExitOk;
}

int cmd_pit(const Flags& fl, const std::string& params_path,
            const std::string& data_path) {
  const bgev::ParamsFile pf = bgev::read_params_file(params_path);
  const std::vector<double> data = bgev::read_data_csv(data_path);
  if (data.empty()) throw std::runtime_error(data_path + ": no observations");
  const bgev::PitReport rep =
      bgev::pit(data, pf.model, pf.params, pf.cfg);
  std::ostringstream os;
  os.precision(17);
  os << "index,observation,pit\n";
  for (std::size_t i = 0; i < data.size(); ++i)
    os << i << ',' << data[i] << ',' << rep.values[i] << '\n';
  os << "# ks_distance=" << rep.ks_distance << '\n';
  write_output(fl.out_path, os.str());
  return kExitOk;
}

int cmd_simulate(const Flags& fl, const std::string& study) {
  const bgev::RunConfig rc = resolve_config(fl);
  std::string csv;
  std::string table;
  if (study == "study1") {
    bgev::Study1Spec spec;
    if (fl.fast) spec.replicates = 100;
    const bgev::SimReport rep = bgev::study1(spec, rc.seed, rc.optimiser);
    csv = rep.to_csv();
    table = rep.to_table();
  } else if (study == "study2") {
    bgev::Study2Spec spec;
    if (fl.fast) spec.replicates = 100;
    const bgev::SimReport rep = bgev::study2(spec, rc.seed, rc.optimiser);
    csv = rep.to_csv();
    table = rep.to_table();
  } else if (study == "study3") {
    bgev::Study3Spec spec;
    if (fl.fast) spec.replicates = 100;
    const bgev::SimReport rep = bgev::study3(spec, rc.seed, rc.optimiser);
    csv = rep.to_csv();
    table = rep.to_table();
  } else if (study == "demo") {
    bgev::DemoSpec spec;
    if (fl.fast) spec.replicates = 10000;
    const bgev::DemoReport rep = bgev::demo_cauchy(spec, rc.seed);
    csv = rep.to_csv();
    table = csv;
  } else {
    throw std::runtime_error("unknown study '" + study +
                             "' (expected study1|study2|study3|demo)");
  }
  if (fl.out_path.empty()) {
    std::cout << csv;
  } else {
    write_output(fl.out_path, csv);
    std::cout << table;
  }
  return kExitOk;
}

int cmd_prior(const Flags& fl, const std::string& grid) {
  const bgev::RunConfig rc = resolve_config(fl);
  double start = 0.0, step = 0.01, stop = 0.49;
  {
    std::istringstream is(grid);
    char c1 = 0, c2 = 0;
    if (!(is >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' ||
        !(step > 0.0) || stop < start)
      throw std::runtime_error("grid must be start:step:stop, got '" + grid +
                               "'");
  }
  const bgev::PcPrior prior =
      bgev::PcPrior::make(rc.prior_lambda, rc.prior_upper);
  std::ostringstream os;
  os.precision(17);
  os << "xi,pc_density,p3c_density\n";
  // Integer stepping keeps the grid free of accumulated rounding drift.
  const auto steps = static_cast<std::size_t>((stop - start) / step + 1e-9);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double xi = start + static_cast<double>(i) * step;
    os << xi << ',' << bgev::pc_density(xi, rc.prior_lambda) << ','
       << bgev::p3c_density(xi, prior) << '\n';
  }
  write_output(fl.out_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blended GEV distribution toolkit"};
  app.require_subcommand(1);
  Flags fl;

  std::string data_path, params_path, study, grid = "0:0.01:0.49";
  std::vector<double> periods;
  std::size_t count = 1000;

  CLI::App* fit = app.add_subcommand("fit", "Fit a model to a data file");
  fit->add_option("data", data_path, "Single-column CSV of observations")
      ->required();
  add_common_flags(fit, fl);

  CLI::App* sample =
      app.add_subcommand("sample", "Draw samples from fitted parameters");
  sample->add_option("params", params_path, "Fitted-parameter key=value file")
      ->required();
  sample->add_option("-n,--count", count, "Number of draws");
  add_common_flags(sample, fl);

  CLI::App* rl = app.add_subcommand("rl", "Return levels at given periods");
  rl->add_option("params", params_path, "Fitted-parameter key=value file")
      ->required();
  rl->add_option("-T,--period", periods, "Return period in blocks (repeatable)")
      ->required();
  add_common_flags(rl, fl);

  CLI::App* pit =
      app.add_subcommand("pit", "Probability integral transform of data");
  pit->add_option("params", params_path, "Fitted-parameter key=value file")
      ->required();
  pit->add_option("data", data_path, "Single-column CSV of observations")
      ->required();
  add_common_flags(pit, fl);

  CLI::App* sim = app.add_subcommand("simulate", "Run a simulation study");
  sim->add_option("study", study, "study1|study2|study3|demo")->required();
  sim->add_flag("--fast", fl.fast, "Reduced replicate count");
  add_common_flags(sim, fl);

  CLI::App* prior =
      app.add_subcommand("prior", "Tabulate the shape-prior densities");
  prior->add_option("--grid", grid, "Evaluation grid start:step:stop");
  add_common_flags(prior, fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (fit->parsed()) return cmd_fit(fl, data_path);
    if (sample->parsed()) return cmd_sample(fl, params_path, count);
    if (rl->parsed()) return cmd_rl(fl, params_path, periods);
    if (pit->parsed()) return cmd_pit(fl, params_path, data_path);
    if (sim->parsed()) return cmd_simulate(fl, study);
    if (prior->parsed()) return cmd_prior(fl, grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
