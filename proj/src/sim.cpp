#include "bgev/sim.hpp"

#include <cmath>
#include <iomanip>
#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bgev/blend.hpp"
#include "bgev/rng.hpp"

namespace bgev {

namespace {

const char* study_name(Study s) {
  switch (s) {
    case Study::kStudy1: return "study1";
    case Study::kStudy2: return "study2";
    case Study::kStudy3: return "study3";
    case Study::kDemo: return "demo";
  }
  return "?";
}

double frechet_draw(double u, double alpha_f) {
  return std::exp(-std::log(-std::log(u)) / alpha_f);
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

constexpr std::uint64_t kStudy1Tag = 1;
constexpr std::uint64_t kStudy2Tag = 2;
constexpr std::uint64_t kStudy3Tag = 3;
constexpr std::uint64_t kDemoTag = 4;

}  // namespace

std::string SimReport::to_csv() const {
  std::ostringstream os;
  os << "study,cell_key,metric,value,replicates,seed\n";
  os.precision(12);
  for (const SimCell& c : cells) {
    // Cell keys contain commas; the field is quoted to keep the CSV valid.
    const bool quote = c.key.find(',') != std::string::npos;
    os << study_name(study) << ',';
    if (quote)
      os << '"' << c.key << '"';
    else
      os << c.key;
    os << ',' << c.metric << ',';
    if (c.skipped)
      os << "skipped";
    else
      os << c.value;
    os << ',' << c.replicates << ',' << master_seed << '\n';
  }
  return os.str();
}

std::string SimReport::to_table() const {
  std::ostringstream os;
  os << "== " << study_name(study) << " (M=" << replicates
     << ", seed=" << master_seed << ") ==\n";
  for (const SimCell& c : cells) {
    os << std::left << std::setw(36) << c.key << ' ' << std::setw(10)
       << c.metric << ' ';
    if (c.skipped)
      os << "skipped: " << c.skip_reason;
    else
      os << std::fixed << std::setprecision(2) << c.value
         << std::defaultfloat << std::setprecision(6);
    if (c.unreliable) os << "  [unreliable: " << c.failures << " failures]";
    os << '\n';
  }
  if (!notes.empty()) os << notes << '\n';
  return os.str();
}

SimReport study1(const Study1Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings) {
  if (spec.replicates < 1)
    throw std::invalid_argument("study1: need at least one replicate");

  SimReport rep;
  rep.study = Study::kStudy1;
  rep.master_seed = master_seed;
  rep.replicates = spec.replicates;
  rep.notes =
      "metric: rmse(gev) - rmse(bgev) of the T-block return level, both fits "
      "on identical data and start values";

  const BlendConfig cfg{};  // application defaults
  std::vector<double> maxima;

  for (const std::size_t n : spec.block_sizes) {
    for (const std::size_t n_max : spec.n_maxima) {
      const std::uint64_t cell_id = n * 1000003ull + n_max;
      // per (n, N): accumulate squared errors for each T over replicates
      std::vector<double> se_gev(spec.return_periods.size(), 0.0);
      std::vector<double> se_bgev(spec.return_periods.size(), 0.0);
      std::size_t failures = 0;

      const ClassicParams truth = frechet_block_max_params(n, spec.alpha_f);

      for (std::size_t m = 0; m < spec.replicates; ++m) {
        const std::uint64_t seed =
            derive_seed(master_seed, kStudy1Tag, cell_id, m);
        CounterRng rng(seed);
        maxima.clear();
        maxima.reserve(n_max);
        std::uint64_t ctr = 0;
        for (std::size_t j = 0; j < n_max; ++j) {
          double block_max = -1.0;
          for (std::size_t i = 0; i < n; ++i) {
            const double v =
                frechet_draw(rng.uniform_at(ctr++), spec.alpha_f);
            if (v > block_max) block_max = v;
          }
          maxima.push_back(block_max);
        }

        const FitResult fg =
            fit(maxima, Model::kGev, cfg, std::nullopt, settings);
        const FitResult fb =
            fit(maxima, Model::kBgev, cfg, std::nullopt, settings);
        if (!fg.converged || !fb.converged) ++failures;

        for (std::size_t t = 0; t < spec.return_periods.size(); ++t) {
          const double T = spec.return_periods[t];
          const double z = gev_quantile(1.0 - 1.0 / T, truth);
          const double eg = return_level(fg, T) - z;
          const double eb = return_level(fb, T) - z;
          se_gev[t] += eg * eg;
          se_bgev[t] += eb * eb;
        }
      }

      for (std::size_t t = 0; t < spec.return_periods.size(); ++t) {
        const double M = static_cast<double>(spec.replicates);
        const double diff =
            std::sqrt(se_gev[t] / M) - std::sqrt(se_bgev[t] / M);
        SimCell cell;
        std::ostringstream key;
        key << "n=" << n << ",N=" << n_max << ",T=" << spec.return_periods[t];
        cell.key = key.str();
        cell.metric = "rmse_diff";
        cell.raw = diff;
        cell.value = round2(diff);
        cell.replicates = spec.replicates;
        cell.failures = failures;
        cell.unreliable =
            failures * 20 > spec.replicates;  // > 5% failed replicates
        rep.cells.push_back(std::move(cell));
      }
    }
  }
  return rep;
}

namespace {

struct StudyCell {
  std::string key;
  BlendConfig cfg;
  bool skipped = false;
  std::string reason;
};

// Shared machinery for studies 2 and 3: GEV(0,1,0.1) data, 50-block
// return-level RMSE for a list of blend configurations plus a GEV baseline.
SimReport run_gev_target_study(Study study, std::uint64_t tag,
                               const std::vector<StudyCell>& cells,
                               std::size_t n_maxima, double return_period,
                               std::size_t replicates,
                               std::uint64_t master_seed,
                               const OptimiserSettings& settings) {
  if (replicates < 1)
    throw std::invalid_argument("simulation study: need at least one replicate");

  const ClassicParams truth{0.0, 1.0, 0.1};
  const double z_true = gev_quantile(1.0 - 1.0 / return_period, truth);

  struct Acc {
    double se = 0.0;
    std::size_t failures = 0;
    bool usable = true;
    std::string reason;
  };
  std::vector<Acc> acc(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].skipped) {
      acc[c].usable = false;
      acc[c].reason = cells[c].reason;
      continue;
    }
    try {
      validate_blend_config(cells[c].cfg, false);
    } catch (const std::exception& e) {
      acc[c].usable = false;
      acc[c].reason = e.what();
    }
  }
  Acc gev_acc;

  std::vector<double> data(n_maxima);
  const BlendConfig default_cfg{};

  for (std::size_t m = 0; m < replicates; ++m) {
    const std::uint64_t seed = derive_seed(master_seed, tag, 0, m);
    CounterRng rng(seed);
    for (std::size_t j = 0; j < n_maxima; ++j)
      data[j] = gev_quantile(rng.uniform_at(j), truth);

    const FitResult fg =
        fit(data, Model::kGev, default_cfg, std::nullopt, settings);
    if (!fg.converged) ++gev_acc.failures;
    const double eg = return_level(fg, return_period) - z_true;
    gev_acc.se += eg * eg;

    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!acc[c].usable) continue;
      const FitResult fb =
          fit(data, Model::kBgev, cells[c].cfg, std::nullopt, settings);
      if (!fb.converged) ++acc[c].failures;
      const double eb = return_level(fb, return_period) - z_true;
      acc[c].se += eb * eb;
    }
  }

  SimReport rep;
  rep.study = study;
  rep.master_seed = master_seed;
  rep.replicates = replicates;
  {
    std::ostringstream os;
    os << "target: (1-1/" << return_period
       << ")-quantile of GEV(0,1,0.1), z=" << z_true
       << "; data are direct GEV draws (return period interpreted in blocks)";
    rep.notes = os.str();
  }

  const double M = static_cast<double>(replicates);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SimCell cell;
    cell.key = cells[c].key;
    cell.metric = "rmse";
    cell.replicates = replicates;
    if (!acc[c].usable) {
      cell.skipped = true;
      cell.skip_reason = acc[c].reason;
    } else {
      cell.raw = std::sqrt(acc[c].se / M);
      cell.value = cell.raw;
      cell.failures = acc[c].failures;
      cell.unreliable = acc[c].failures * 20 > replicates;
    }
    rep.cells.push_back(std::move(cell));
  }
  SimCell base;
  base.key = "gev_baseline";
  base.metric = "rmse";
  base.replicates = replicates;
  base.raw = std::sqrt(gev_acc.se / M);
  base.value = base.raw;
  base.failures = gev_acc.failures;
  base.unreliable = gev_acc.failures * 20 > replicates;
  rep.cells.push_back(std::move(base));
  return rep;
}

}  // namespace

SimReport study2(const Study2Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings) {
  std::vector<StudyCell> cells;
  for (const double pa : spec.p_a)
    for (const double pb : spec.p_b)
      for (const double c : spec.c) {
        std::ostringstream key;
        key << "p_a=" << pa << ",p_b=" << pb << ",c=" << c;
        BlendConfig cfg;
        cfg.p_a = pa;
        cfg.p_b = pb;
        cfg.weights = {c, c};
        cells.push_back({key.str(), cfg});
      }
  return run_gev_target_study(Study::kStudy2, kStudy2Tag, cells,
                              spec.n_maxima, spec.return_period,
                              spec.replicates, master_seed, settings);
}

SimReport study3(const Study3Spec& spec, std::uint64_t master_seed,
                 const OptimiserSettings& settings) {
  std::vector<StudyCell> cells;
  for (const double a : spec.alpha)
    for (const double b : spec.beta) {
      std::ostringstream key;
      key << "alpha=" << a << ",beta=" << b;
      BlendConfig cfg;
      cfg.alpha = a;
      cfg.beta = b;
      StudyCell cell{key.str(), cfg};
      if (cfg.p_b > std::min(a, 0.5 * b)) {
        cell.skipped = true;
        cell.reason = "p_b exceeds min(alpha, beta/2)";
      }
      cells.push_back(std::move(cell));
    }
  return run_gev_target_study(Study::kStudy3, kStudy3Tag, cells,
                              spec.n_maxima, spec.return_period,
                              spec.replicates, master_seed, settings);
}

std::string DemoReport::to_csv() const {
  std::ostringstream os;
  os << "n,mass_below_zero,exact_mass,sup_distance\n";
  os.precision(12);
  for (const DemoRow& r : rows)
    os << r.n << ',' << r.mass_below_zero << ',' << r.exact_mass << ','
       << r.sup_distance << '\n';
  return os.str();
}

DemoReport demo_cauchy(const DemoSpec& spec, std::uint64_t master_seed) {
  for (const std::size_t n : spec.block_sizes)
    if (n < 2) throw std::invalid_argument("demo_cauchy: block sizes must be >= 2");
  if (spec.replicates < 1)
    throw std::invalid_argument("demo_cauchy: need at least one replicate");

  std::vector<std::size_t> sizes = spec.block_sizes;
  std::sort(sizes.begin(), sizes.end());
  const std::size_t n_max = sizes.back();

  // Matched seeds: replicate r draws one Cauchy stream; block maxima for
  // every n are prefix maxima of that stream.
  std::vector<std::vector<double>> maxima(sizes.size());
  for (auto& v : maxima) v.reserve(spec.replicates);

  constexpr double kPi = 3.14159265358979323846;
  for (std::size_t r = 0; r < spec.replicates; ++r) {
    CounterRng rng(derive_seed(master_seed, kDemoTag, 0, r));
    double running = -std::numeric_limits<double>::infinity();
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_max; ++i) {
      const double x = std::tan(kPi * (rng.uniform_at(i) - 0.5));
      if (x > running) running = x;
      while (next < sizes.size() && i + 1 == sizes[next]) {
        maxima[next].push_back(running);
        ++next;
      }
    }
  }

  // Grid for the sup-distance to the unit Frechet limit exp(-1/z).
  std::vector<double> grid;
  for (double p = 0.01; p < 0.995; p += 0.01) grid.push_back(-1.0 / std::log(p));

  DemoReport rep;
  rep.master_seed = master_seed;
  rep.replicates = spec.replicates;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double n = static_cast<double>(sizes[k]);
    const double scale = n / kPi;
    std::vector<double> std_max = maxima[k];
    for (double& v : std_max) v /= scale;
    std::sort(std_max.begin(), std_max.end());

    const double m = static_cast<double>(std_max.size());
    const auto ecdf = [&](double z) {
      const auto it =
          std::upper_bound(std_max.begin(), std_max.end(), z);
      return static_cast<double>(it - std_max.begin()) / m;
    };

    DemoRow row;
    row.n = sizes[k];
    row.mass_below_zero = ecdf(0.0);
    row.exact_mass = std::pow(0.5, n);
    double d = 0.0;
    for (const double z : grid)
      d = std::max(d, std::fabs(ecdf(z) - std::exp(-1.0 / z)));
    row.sup_distance = d;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace bgev
