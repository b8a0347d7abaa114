#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bgev/blend.hpp"
#include "bgev/numerics.hpp"
#include "bgev/rng.hpp"

using namespace bgev;

namespace {
const QuantileParams kQp{1.0, 2.0, 0.2, 0.5, 0.5};
const BlendConfig kCfg{};  // alpha=beta=0.5, p_a=0.05, p_b=0.2, c1=c2=5
}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate_blend_config(kCfg, true));
  BlendConfig bad = kCfg;
  bad.p_a = 0.3;  // p_a >= p_b
  CHECK_THROWS_AS(validate_blend_config(bad, false), std::invalid_argument);
  BlendConfig wide = kCfg;
  wide.p_b = 0.3;  // violates p_b <= beta/2 only in strict mode
  CHECK_NOTHROW(validate_blend_config(wide, false));
  CHECK_THROWS_AS(validate_blend_config(wide, true), std::invalid_argument);
  BlendConfig softw = kCfg;
  softw.weights = {2.0, 2.0};  // shapes <= 3 rejected only in strict mode
  CHECK_NOTHROW(validate_blend_config(softw, false));
  CHECK_THROWS_AS(validate_blend_config(softw, true), std::invalid_argument);
}

TEST_CASE("negative shape is rejected") {
  QuantileParams neg = kQp;
  neg.xi = -0.1;
  CHECK_THROWS_AS(derive_blend(neg, kCfg), std::domain_error);
}

TEST_CASE("Gumbel component matches the Frechet at the mixing bounds") {
  const Blend bl = make_blend(kQp, kCfg);
  // a and b are exact Frechet quantiles...
  CHECK(gev_cdf_q(bl.d.a, kQp) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(gev_cdf_q(bl.d.b, kQp) == doctest::Approx(0.2).epsilon(1e-12));
  // ...and the matched Gumbel passes through the same two points.
  CHECK(gev_cdf(bl.d.a, bl.gumbel) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(gev_cdf(bl.d.b, bl.gumbel) == doctest::Approx(0.2).epsilon(1e-12));
  // Anchors of the matching formula: l_{0.05} and l_{0.2}.
  CHECK(std::log(-std::log(0.05)) == doctest::Approx(1.0971887004).epsilon(1e-9));
  CHECK(std::log(-std::log(0.2)) == doctest::Approx(0.4758849953).epsilon(1e-9));
}

TEST_CASE("cdf is the pure component outside the mixing region") {
  const Blend bl = make_blend(kQp, kCfg);
  for (double x : {bl.d.a - 2.0, bl.d.a - 0.5, bl.d.a}) {
    CHECK(bgev_cdf(x, bl) ==
          doctest::Approx(gev_cdf(x, bl.gumbel)).epsilon(1e-14));
  }
  for (double x : {bl.d.b, bl.d.b + 1.0, bl.d.b + 10.0}) {
    CHECK(bgev_cdf(x, bl) ==
          doctest::Approx(gev_cdf(x, bl.frechet)).epsilon(1e-14));
  }
  // Seam values.
  CHECK(bgev_cdf(bl.d.a, bl) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(bgev_cdf(bl.d.b, bl) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("weight function endpoints and monotonicity") {
  const Blend bl = make_blend(kQp, kCfg);
  CHECK(weight(bl.d.a, bl.d, kCfg.weights) == 0.0);
  CHECK(weight(bl.d.b, bl.d, kCfg.weights) == 1.0);
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double x = bl.d.a + (bl.d.b - bl.d.a) * i / 50.0;
    const double w = weight(x, bl.d, kCfg.weights);
    CHECK(w >= prev);
    prev = w;
  }
}

TEST_CASE("cdf is continuous, increasing, with full-line support") {
  const Blend bl = make_blend(kQp, kCfg);
  double prev = 0.0;
  for (double x = -15.0; x <= 40.0; x += 0.05) {
    const double c = bgev_cdf(x, bl);
    CHECK(c >= prev);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    prev = c;
  }
  // No finite lower endpoint: far-left probes still carry (tiny) mass.
  const double far_left = gev_quantile(1e-12, bl.gumbel);
  CHECK(bgev_cdf(far_left, bl) > 0.0);
  CHECK(bgev_cdf(far_left, bl) < 1e-10);
}

TEST_CASE("quantile inverts the cdf") {
  const Blend bl = make_blend(kQp, kCfg);
  for (double p : {0.001, 0.05, 0.07, 0.12, 0.2, 0.5, 0.9, 0.999}) {
    const double x = bgev_quantile(p, bl);
    CHECK(bgev_cdf(x, bl) == doctest::Approx(p).epsilon(1e-9));
  }
  for (double x : {-3.0, bl.d.a, 0.5 * (bl.d.a + bl.d.b), bl.d.b, 5.0}) {
    CHECK(bgev_quantile(bgev_cdf(x, bl), bl) ==
          doctest::Approx(x).epsilon(1e-8));
  }
}

TEST_CASE("pdf matches finite differences of the cdf everywhere") {
  const Blend bl = make_blend(kQp, kCfg);
  const double h = 1e-6;
  for (double x = -4.0; x <= 10.0; x += 0.25) {
    const double fd = (bgev_cdf(x + h, bl) - bgev_cdf(x - h, bl)) / (2 * h);
    const double f = bgev_pdf(x, bl);
    CHECK(f == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("density integrates to one") {
  const Blend bl = make_blend(kQp, kCfg);
  // Quantile-based limits keep the bulk central for the quadrature; the
  // clipped tails contribute 2e-9.
  const double lo = bgev_quantile(1e-9, bl);
  const double hi = bgev_quantile(1.0 - 1e-9, bl);
  const double mass =
      integrate([&](double x) { return bgev_pdf(x, bl); }, lo, hi, 1e-9);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("log pdf agrees with pdf") {
  const Blend bl = make_blend(kQp, kCfg);
  for (double x : {-2.0, 0.0, 0.8, 1.5, 6.0})
    CHECK(std::exp(bgev_log_pdf(x, bl)) ==
          doctest::Approx(bgev_pdf(x, bl)).epsilon(1e-12));
}

TEST_CASE("analytic derivatives match finite differences on each branch") {
  const Blend bl = make_blend(kQp, kCfg);
  const double span = bl.d.b - bl.d.a;
  auto check_at = [&](double x, double tol1, double tol2) {
    const auto d = bgev_pdf_derivs(x, bl);
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    const double fp = bgev_pdf(x + h, bl);
    const double fm = bgev_pdf(x - h, bl);
    const double f0 = bgev_pdf(x, bl);
    const double fd1 = (fp - fm) / (2 * h);
    const double fd2 = (fp - 2 * f0 + fm) / (h * h);
    CHECK(d.h == doctest::Approx(f0).epsilon(1e-12));
    CHECK(d.dh == doctest::Approx(fd1).epsilon(tol1));
    CHECK(d.d2h == doctest::Approx(fd2).epsilon(tol2));
  };
  for (int i = 1; i < 10; ++i) {  // interior of the blend region
    check_at(bl.d.a + span * i / 10.0, 1e-5, 1e-3);
  }
  for (double x : {bl.d.a - 1.5, bl.d.a - 0.3}) check_at(x, 1e-6, 1e-4);
  for (double x : {bl.d.b + 0.3, bl.d.b + 3.0}) check_at(x, 1e-6, 1e-4);
}

TEST_CASE("density is twice continuously differentiable at the seams") {
  const Blend bl = make_blend(kQp, kCfg);
  const double eps = 1e-7;
  for (double seam : {bl.d.a, bl.d.b}) {
    const auto lo = bgev_pdf_derivs(seam - eps, bl);
    const auto hi = bgev_pdf_derivs(seam + eps, bl);
    CHECK(lo.h == doctest::Approx(hi.h).epsilon(1e-6));
    CHECK(lo.dh == doctest::Approx(hi.dh).epsilon(1e-5));
    CHECK(lo.d2h == doctest::Approx(hi.d2h).epsilon(1e-3));
  }
}

TEST_CASE("xi -> 0 collapses the blend to its Gumbel component") {
  QuantileParams tiny = kQp;
  tiny.xi = 1e-12;
  const Blend bl = make_blend(tiny, kCfg);
  QuantileParams zero = kQp;
  zero.xi = 0.0;
  for (double x : {-3.0, 0.0, 1.0, 4.0}) {
    CHECK(bgev_cdf(x, bl) ==
          doctest::Approx(gev_cdf_q(x, zero)).epsilon(1e-7));
    CHECK(bgev_pdf(x, bl) ==
          doctest::Approx(gev_pdf_q(x, zero)).epsilon(1e-7));
  }
}

TEST_CASE("sampling matches the quantile function and is deterministic") {
  const auto xs = bgev_sample(5000, kQp, kCfg, 1234);
  const auto xs2 = bgev_sample(5000, kQp, kCfg, 1234);
  CHECK(xs == xs2);
  const Blend bl = make_blend(kQp, kCfg);
  for (double p : {0.1, 0.5, 0.9}) {
    const double q = bgev_quantile(p, bl);
    std::size_t below = 0;
    for (double x : xs) below += x <= q;
    CHECK(static_cast<double>(below) / 5000.0 ==
          doctest::Approx(p).epsilon(0.07));
  }
}

TEST_CASE("random parameter sweep keeps the density valid") {
  CounterRng rng(77u);
  for (int rep = 0; rep < 25; ++rep) {
    QuantileParams qp{-2.0 + 6.0 * rng.next(), 0.3 + 3.0 * rng.next(),
                      0.02 + 0.6 * rng.next(), 0.5, 0.5};
    const Blend bl = make_blend(qp, kCfg);
    const double h = 1e-6;
    for (double p : {0.03, 0.1, 0.15, 0.5, 0.95}) {
      const double x = bgev_quantile(p, bl);
      const double fd = (bgev_cdf(x + h, bl) - bgev_cdf(x - h, bl)) / (2 * h);
      CHECK(bgev_pdf(x, bl) == doctest::Approx(fd).epsilon(1e-4));
      CHECK(bgev_pdf(x, bl) >= 0.0);
    }
  }
}
