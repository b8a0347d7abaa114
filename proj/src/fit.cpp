#include "bgev/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bgev/kernels.hpp"

namespace bgev {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double worst(double v) { return std::isnan(v) ? kInf : v; }
}  // namespace

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> start,
                     const OptimiserSettings& settings) {
  const std::size_t d = start.size();
  if (d == 0) throw std::invalid_argument("nelder_mead: empty start point");
  const double f0 = worst(f(start));
  if (!std::isfinite(f0))
    throw std::invalid_argument("nelder_mead: objective not finite at start");

  // fminsearch-style initial simplex
  std::vector<std::vector<double>> xs(d + 1, start);
  std::vector<double> fs(d + 1, f0);
  for (std::size_t i = 0; i < d; ++i) {
    double& c = xs[i + 1][i];
    c = (c != 0.0) ? 1.05 * c : 0.00025;
    fs[i + 1] = worst(f(xs[i + 1]));
  }

  NmResult res;
  res.converged = false;
  int iter = 0;

  auto order = [&] {
    std::vector<std::size_t> idx(d + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::vector<std::vector<double>> nxs(d + 1);
    std::vector<double> nfs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      nxs[i] = std::move(xs[idx[i]]);
      nfs[i] = fs[idx[i]];
    }
    xs = std::move(nxs);
    fs = std::move(nfs);
  };

  order();
  for (; iter < settings.max_iter; ++iter) {
    res.trace.push_back(fs[0]);

    double diameter = 0.0;
    double spread = 0.0;
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        diameter = std::max(diameter, std::fabs(xs[i][j] - xs[0][j]));
      if (std::isfinite(fs[i]))
        spread = std::max(spread, std::fabs(fs[i] - fs[0]));
      else
        spread = kInf;
    }
    if (diameter < settings.x_tol || spread < settings.f_tol) {
      res.converged = true;
      break;
    }

    // centroid of all but the worst vertex
    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) centroid[j] += xs[i][j] / d;

    auto at = [&](double coef) {
      std::vector<double> p(d);
      for (std::size_t j = 0; j < d; ++j)
        p[j] = centroid[j] + coef * (xs[d][j] - centroid[j]);
      return p;
    };

    const std::vector<double> xr = at(-settings.reflection);
    const double fr = worst(f(xr));
    if (fr < fs[0]) {
      const std::vector<double> xe = at(-settings.reflection * settings.expansion);
      const double fe = worst(f(xe));
      if (fe < fr) {
        xs[d] = xe;
        fs[d] = fe;
      } else {
        xs[d] = xr;
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = xr;
      fs[d] = fr;
    } else {
      const bool outside = fr < fs[d];
      const std::vector<double> xc =
          at(outside ? -settings.reflection * settings.contraction
                     : settings.contraction);
      const double fc = worst(f(xc));
      if (fc < std::min(fr, fs[d])) {
        xs[d] = xc;
        fs[d] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= d; ++i) {
          for (std::size_t j = 0; j < d; ++j)
            xs[i][j] = xs[0][j] + settings.shrink * (xs[i][j] - xs[0][j]);
          fs[i] = worst(f(xs[i]));
        }
      }
    }
    order();
  }

  res.x = xs[0];
  res.value = fs[0];
  res.iterations = iter;

  for (int r = 0; r < settings.restarts; ++r) {
    OptimiserSettings inner = settings;
    inner.restarts = 0;
    const NmResult again = nelder_mead(f, res.x, inner);
    const bool better = again.value < res.value;
    const int total_iter = res.iterations + again.iterations;
    if (better) {
      const auto prev_trace = res.trace;
      res = again;
      res.trace = prev_trace;
      res.trace.insert(res.trace.end(), again.trace.begin(), again.trace.end());
    } else {
      res.converged = res.converged || again.converged;
    }
    res.iterations = total_iter;
  }
  return res;
}

double loglik_gev(std::span<const double> data, const QuantileParams& qp) {
  if (data.empty()) throw std::invalid_argument("loglik_gev: empty data");
  const ClassicParams p = to_classic(qp);
  kernels::LogPdfSum s;
  if (std::fabs(p.xi) < kXiZeroEps)
    s = kernels::gumbel_log_pdf_sum(data.data(), data.size(), p.mu, p.sigma);
  else
    s = kernels::gev_log_pdf_sum(data.data(), data.size(), p.mu, p.sigma, p.xi);
  return s.out_of_support > 0 ? -kInf : s.sum;
}

double loglik_bgev(std::span<const double> data, const QuantileParams& qp,
                   const BlendConfig& cfg) {
  if (data.empty()) throw std::invalid_argument("loglik_bgev: empty data");
  const Blend bl = make_blend(qp, cfg);
  if (bl.xi_zero) {
    const auto s = kernels::gumbel_log_pdf_sum(data.data(), data.size(),
                                               bl.gumbel.mu, bl.gumbel.sigma);
    return s.sum;
  }

  thread_local std::vector<double> left, right;
  left.clear();
  right.clear();
  double mid_sum = 0.0;
  for (const double x : data) {
    if (x <= bl.d.a)
      left.push_back(x);
    else if (x >= bl.d.b)
      right.push_back(x);
    else
      mid_sum += bgev_log_pdf(x, bl);
  }
  double total = mid_sum;
  if (!left.empty())
    total += kernels::gumbel_log_pdf_sum(left.data(), left.size(),
                                         bl.gumbel.mu, bl.gumbel.sigma)
                 .sum;
  if (!right.empty())
    total += kernels::gev_log_pdf_sum(right.data(), right.size(),
                                      bl.frechet.mu, bl.frechet.sigma,
                                      bl.frechet.xi)
                 .sum;
  return total;
}

double empirical_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty())
    throw std::invalid_argument("empirical_quantile: empty data");
  const double h = p * (static_cast<double>(sorted.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

namespace {

double softplus(double x) {
  return x > 30.0 ? x : std::log1p(std::exp(x));
}

double softplus_inv(double y) { return y > 30.0 ? y : std::log(std::expm1(y)); }

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double p) { return std::log(p / (1.0 - p)); }

const char* model_name(Model m) { return m == Model::kGev ? "gev" : "bgev"; }

}  // namespace

FitResult fit(std::span<const double> data, Model model, const BlendConfig& cfg,
              const std::optional<PcPrior>& prior,
              const OptimiserSettings& settings) {
  if (data.empty()) throw std::invalid_argument("fit: empty data");
  validate_blend_config(cfg, false);

  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  const double q0 = empirical_quantile(sorted, cfg.alpha);
  const double s0 = empirical_quantile(sorted, 1.0 - 0.5 * cfg.beta) -
                    empirical_quantile(sorted, 0.5 * cfg.beta);

  FitResult out;
  out.model = model;
  out.cfg = cfg;
  out.penalised = prior.has_value();

  if (!(s0 > 0.0)) {
    // degenerate sample: the spread boundary s_beta -> 0 maximises the
    // likelihood without bound
    out.params = {q0, std::numeric_limits<double>::min(), 0.0, cfg.alpha,
                  cfg.beta};
    out.classic = to_classic(out.params);
    out.objective = -kInf;
    out.iterations = 0;
    out.converged = false;
    return out;
  }

  const double upper = prior ? prior->upper : 0.5;
  const double xi0 = prior ? std::min(0.1, 0.5 * upper) : 0.1;

  auto xi_from = [&](double v) {
    if (prior) return upper * logistic(v);
    if (model == Model::kBgev) return softplus(v);
    return v;  // GEV MLE: identity, clipped by the objective
  };
  auto xi_to = [&](double xi) {
    if (prior) return logit(xi / upper);
    if (model == Model::kBgev) return softplus_inv(xi);
    return xi;
  };

  auto objective = [&](const std::vector<double>& v) -> double {
    const double xi = xi_from(v[2]);
    if (model == Model::kGev && (xi <= -0.5 || xi >= 1.0)) return kInf;
    const QuantileParams qp{v[0], std::exp(v[1]), xi, cfg.alpha, cfg.beta};
    double ll;
    try {
      ll = model == Model::kGev ? loglik_gev(data, qp)
                                : loglik_bgev(data, qp, cfg);
    } catch (const std::exception&) {
      return kInf;
    }
    if (prior) ll += p3c_log_density(xi, *prior);
    return -ll;
  };

  const std::vector<double> start{q0, std::log(s0), xi_to(xi0)};
  const NmResult nm = nelder_mead(objective, start, settings);

  out.params = {nm.x[0], std::exp(nm.x[1]), xi_from(nm.x[2]), cfg.alpha,
                cfg.beta};
  out.classic = to_classic(out.params);
  out.objective = -nm.value;
  out.iterations = nm.iterations;
  out.converged = nm.converged;
  return out;
}

double return_level(const FitResult& fr, double T) {
  if (!(T > 1.0)) throw std::domain_error("return_level: T must exceed 1");
  const double p = 1.0 - 1.0 / T;
  if (fr.model == Model::kGev) return gev_quantile_q(p, fr.params);
  return bgev_quantile(p, fr.params, fr.cfg);
}

std::string FitResult::to_key_value() const {
  std::ostringstream os;
  os.precision(17);
  os << "model=" << model_name(model) << '\n'
     << "q_alpha=" << params.q_alpha << '\n'
     << "s_beta=" << params.s_beta << '\n'
     << "xi=" << params.xi << '\n'
     << "alpha=" << params.alpha << '\n'
     << "beta=" << params.beta << '\n'
     << "mu=" << classic.mu << '\n'
     << "sigma=" << classic.sigma << '\n'
     << "objective=" << objective << '\n'
     << "iterations=" << iterations << '\n'
     << "converged=" << (converged ? 1 : 0) << '\n'
     << "penalised=" << (penalised ? 1 : 0) << '\n';
  if (model == Model::kBgev)
    os << "p_a=" << cfg.p_a << '\n'
       << "p_b=" << cfg.p_b << '\n'
       << "c1=" << cfg.weights.c1 << '\n'
       << "c2=" << cfg.weights.c2 << '\n';
  return os.str();
}

std::string FitResult::csv_header() {
  return "model,q_alpha,s_beta,xi,alpha,beta,mu,sigma,objective,iterations,"
         "converged,penalised";
}

std::string FitResult::to_csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << model_name(model) << ',' << params.q_alpha << ',' << params.s_beta
     << ',' << params.xi << ',' << params.alpha << ',' << params.beta << ','
     << classic.mu << ',' << classic.sigma << ',' << objective << ','
     << iterations << ',' << (converged ? 1 : 0) << ',' << (penalised ? 1 : 0);
  return os.str();
}

}  // namespace bgev
