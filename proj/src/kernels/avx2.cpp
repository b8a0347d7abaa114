#include <immintrin.h>

#include <bit>
#include <cmath>

#include "bgev/kernels.hpp"
#include "avx2_math.hpp"

namespace bgev::kernels::avx2 {

using avx2_math::exp_pd;
using avx2_math::log_pd;

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

LogPdfSum gumbel_log_pdf_sum(const double* x, std::size_t n, double mu,
                             double sigma) {
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vinv_sigma = _mm256_set1_pd(1.0 / sigma);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi_v = _mm256_loadu_pd(x + i);
    const __m256d z = _mm256_mul_pd(_mm256_sub_pd(xi_v, vmu), vinv_sigma);
    const __m256d nz = _mm256_sub_pd(_mm256_setzero_pd(), z);
    acc = _mm256_add_pd(acc, _mm256_sub_pd(nz, exp_pd(nz)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double z = (x[i] - mu) / sigma;
    sum += -z - std::exp(-z);
  }
  return {sum - static_cast<double>(n) * std::log(sigma), 0};
}

LogPdfSum gev_log_pdf_sum(const double* x, std::size_t n, double mu,
                          double sigma, double xi) {
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vxis = _mm256_set1_pd(xi / sigma);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vcoef = _mm256_set1_pd(1.0 + 1.0 / xi);
  const __m256d vninv_xi = _mm256_set1_pd(-1.0 / xi);
  __m256d acc = _mm256_setzero_pd();
  std::size_t bad = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi_v = _mm256_loadu_pd(x + i);
    const __m256d u =
        _mm256_add_pd(vone, _mm256_mul_pd(_mm256_sub_pd(xi_v, vmu), vxis));
    const __m256d valid = _mm256_cmp_pd(u, _mm256_setzero_pd(), _CMP_GT_OQ);
    const __m256d u_safe = _mm256_blendv_pd(vone, u, valid);
    const __m256d logu = log_pd(u_safe);
    const __m256d term = _mm256_sub_pd(
        _mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), vcoef), logu),
        exp_pd(_mm256_mul_pd(logu, vninv_xi)));
    acc = _mm256_add_pd(acc, _mm256_and_pd(term, valid));
    bad += 4 - std::popcount(
                   static_cast<unsigned>(_mm256_movemask_pd(valid)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double w = xi * (x[i] - mu) / sigma;
    if (w <= -1.0) {
      ++bad;
      continue;
    }
    const double logt = std::log1p(w);
    sum += -(1.0 + 1.0 / xi) * logt - std::exp(-logt / xi);
  }
  return {sum - static_cast<double>(n - bad) * std::log(sigma), bad};
}

}  // namespace bgev::kernels::avx2
