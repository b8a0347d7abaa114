#include "bgev/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bgev {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double log_beta(const BetaShape& s) {
  return log_gamma(s.c1) + log_gamma(s.c2) - log_gamma(s.c1 + s.c2);
}

namespace {

// Modified Lentz continued fraction for the incomplete beta function,
// valid (rapidly convergent) for y < (c1+1)/(c1+c2+2).
double betacf(double a, double b, double y) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * y / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * y / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * y / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double y, const BetaShape& s) {
  if (!(s.c1 > 0.0) || !(s.c2 > 0.0))
    throw std::domain_error("reg_inc_beta: shape parameters must be positive");
  if (y < 0.0 || y > 1.0)
    throw std::domain_error("reg_inc_beta: argument outside [0,1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;

  const double front =
      std::exp(s.c1 * std::log(y) + s.c2 * std::log1p(-y) - log_beta(s));
  if (y < (s.c1 + 1.0) / (s.c1 + s.c2 + 2.0))
    return front * betacf(s.c1, s.c2, y) / s.c1;
  return 1.0 - front * betacf(s.c2, s.c1, 1.0 - y) / s.c2;
}

BetaPdfDerivs beta_pdf_and_derivs(double y, const BetaShape& s) {
  if (!(y > 0.0) || !(y < 1.0))
    throw std::domain_error("beta_pdf_and_derivs: argument outside (0,1)");
  const double a = s.c1;
  const double b = s.c2;
  const double inv_beta = std::exp(-log_beta(s));

  const double u = y;
  const double v = 1.0 - y;
  const double f = std::pow(u, a - 1.0) * std::pow(v, b - 1.0) * inv_beta;
  const double df =
      ((a - 1.0) * std::pow(u, a - 2.0) * std::pow(v, b - 1.0) -
       (b - 1.0) * std::pow(u, a - 1.0) * std::pow(v, b - 2.0)) *
      inv_beta;
  const double d2f =
      ((a - 1.0) * ((a - 2.0) * std::pow(u, a - 3.0) * std::pow(v, b - 1.0) -
                    (b - 1.0) * std::pow(u, a - 2.0) * std::pow(v, b - 2.0)) -
       (b - 1.0) * ((a - 1.0) * std::pow(u, a - 2.0) * std::pow(v, b - 2.0) -
                    (b - 2.0) * std::pow(u, a - 1.0) * std::pow(v, b - 3.0))) *
      inv_beta;
  return {f, df, d2f};
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("find_root: endpoints do not bracket a root");

  double prev = lo, fprev = flo;
  while (hi - lo > tol) {
    // Secant proposal; rejected if it falls outside the current bracket.
    double mid = 0.5 * (lo + hi);
    const double denom = fhi - flo;
    if (denom != 0.0) {
      const double sec = lo - flo * (hi - lo) / denom;
      if (sec > lo + 0.25 * tol && sec < hi - 0.25 * tol &&
          std::fabs(sec - prev) < 0.5 * (hi - lo))
        mid = sec;
    }
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    prev = mid;
    fprev = fmid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  (void)fprev;
  return 0.5 * (lo + hi);
}

namespace {

double simpson(const std::function<double(double)>& f, double lo, double hi,
               double flo, double fmid, double fhi) {
  return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adaptive(const std::function<double(double)>& f, double lo, double hi,
                double flo, double fmid, double fhi, double whole, double tol,
                int depth) {
  if (depth > 50)
    throw std::runtime_error("integrate: refinement budget exhausted");
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double flmid = f(lmid);
  const double frmid = f(rmid);
  const double left = simpson(f, lo, mid, flo, flmid, fmid);
  const double right = simpson(f, mid, hi, fmid, frmid, fhi);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth + 1) +
         adaptive(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  if (lo == hi) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo);
  const double fmid = f(mid);
  const double fhi = f(hi);
  const double whole = simpson(f, lo, hi, flo, fmid, fhi);
  return adaptive(f, lo, hi, flo, fmid, fhi, whole, tol, 0);
}

}  // namespace bgev
