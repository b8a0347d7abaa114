#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "bgev/gev.hpp"
#include "bgev/kernels.hpp"
#include "bgev/rng.hpp"

using namespace bgev;
namespace kn = bgev::kernels;

namespace {

std::vector<double> test_data(std::size_t n, std::uint64_t seed) {
  const QuantileParams qp{1.0, 2.0, 0.15, 0.5, 0.5};
  return gev_sample(n, qp, seed);
}

}  // namespace

TEST_CASE("scalar Gumbel kernel equals a direct log-density sum") {
  const auto xs = test_data(1000, 3);
  const ClassicParams p{0.3, 1.7, 0.0};
  const auto r = kn::scalar::gumbel_log_pdf_sum(xs.data(), xs.size(), p.mu,
                                                p.sigma);
  double expect = 0.0;
  for (double x : xs) expect += gev_log_pdf(x, p);
  CHECK(r.sum == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r.out_of_support == 0);
}

TEST_CASE("scalar GEV kernel equals a direct log-density sum") {
  const auto xs = test_data(1000, 4);
  const ClassicParams p{0.5, 1.2, 0.2};
  const auto r =
      kn::scalar::gev_log_pdf_sum(xs.data(), xs.size(), p.mu, p.sigma, p.xi);
  double expect = 0.0;
  for (double x : xs) expect += gev_log_pdf(x, p);
  CHECK(r.sum == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r.out_of_support == 0);
}

TEST_CASE("GEV kernel counts out-of-support points") {
  // Support of GEV(5, 1, 0.5) is x > 3; feed points on both sides.
  const std::vector<double> xs{2.0, 2.9, 3.5, 4.0, 10.0, -1.0};
  const auto r = kn::scalar::gev_log_pdf_sum(xs.data(), xs.size(), 5.0, 1.0,
                                             0.5);
  CHECK(r.out_of_support == 3);
  CHECK(std::isfinite(r.sum));
}

TEST_CASE("vector backend matches the scalar backend") {
  if (!kn::avx2_available()) {
    MESSAGE("no AVX2 at runtime; dispatch equivalence reduces to scalar");
    return;
  }
  // Sizes straddling the vector width, including ragged tails.
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{4},
                        std::size_t{5}, std::size_t{17}, std::size_t{100},
                        std::size_t{1001}, std::size_t{4096}}) {
    const auto xs = test_data(n, 1000 + n);
    for (double xi : {0.05, 0.3, 0.9}) {
      const auto s =
          kn::scalar::gev_log_pdf_sum(xs.data(), xs.size(), 0.4, 1.3, xi);
      kn::set_backend(kn::Backend::kAvx2);
      const auto v = kn::gev_log_pdf_sum(xs.data(), xs.size(), 0.4, 1.3, xi);
      kn::set_backend(kn::Backend::kAuto);
      CHECK(v.out_of_support == s.out_of_support);
      CHECK(v.sum == doctest::Approx(s.sum).epsilon(1e-11));
    }
    const auto sg =
        kn::scalar::gumbel_log_pdf_sum(xs.data(), xs.size(), 0.4, 1.3);
    kn::set_backend(kn::Backend::kAvx2);
    const auto vg = kn::gumbel_log_pdf_sum(xs.data(), xs.size(), 0.4, 1.3);
    kn::set_backend(kn::Backend::kAuto);
    CHECK(vg.sum == doctest::Approx(sg.sum).epsilon(1e-11));
  }
}

TEST_CASE("vector backend agrees on out-of-support counting") {
  if (!kn::avx2_available()) return;
  CounterRng rng(55u);
  std::vector<double> xs;
  for (int i = 0; i < 777; ++i) xs.push_back(-4.0 + 12.0 * rng.next());
  // Support x > -2 for these parameters; roughly a sixth of points violate.
  const auto s = kn::scalar::gev_log_pdf_sum(xs.data(), xs.size(), 0.0, 1.0,
                                             0.5);
  kn::set_backend(kn::Backend::kAvx2);
  const auto v = kn::gev_log_pdf_sum(xs.data(), xs.size(), 0.0, 1.0, 0.5);
  kn::set_backend(kn::Backend::kAuto);
  CHECK(s.out_of_support > 0);
  CHECK(v.out_of_support == s.out_of_support);
  CHECK(v.sum == doctest::Approx(s.sum).epsilon(1e-11));
}

TEST_CASE("backend override and dispatch reporting") {
  kn::set_backend(kn::Backend::kScalar);
  CHECK(kn::active_backend() == kn::Backend::kScalar);
  kn::set_backend(kn::Backend::kAuto);
  const auto resolved = kn::active_backend();
  CHECK((resolved == kn::Backend::kScalar ||
         resolved == kn::Backend::kAvx2));
}
