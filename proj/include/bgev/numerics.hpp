#pragma once

#include <functional>

namespace bgev {

// Shape pair of a Beta distribution. The blend requires both > 3 for a
// twice continuously differentiable log-density; that constraint is
// enforced by the blend configuration, not here.
struct BetaShape {
  double c1;
  double c2;

  BetaShape swapped() const { return {c2, c1}; }
};

// ln Gamma(x), x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// ln B(c1, c2) = ln Gamma(c1) + ln Gamma(c2) - ln Gamma(c1+c2).
double log_beta(const BetaShape& s);

// Regularised incomplete beta function I_y(c1, c2) for y in [0,1].
// Continued fraction with the symmetry switch at y = (c1+1)/(c1+c2+2).
double reg_inc_beta(double y, const BetaShape& s);

struct BetaPdfDerivs {
  double f;
  double df;
  double d2f;
};

// Beta density and its first two derivatives at y in (0,1).
BetaPdfDerivs beta_pdf_and_derivs(double y, const BetaShape& s);

// Safeguarded root finder on a sign-changing bracket [lo, hi]: bisection
// with secant acceleration, always falling back to the bracket. Returns x
// with bracket width <= tol. Throws std::invalid_argument if f(lo) and
// f(hi) do not have opposite signs.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

// Adaptive Simpson quadrature of f over [lo, hi] with estimated absolute
// error <= tol. Recursion depth is capped at 50; exceeding the cap throws
// std::runtime_error.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-10);

}  // namespace bgev
