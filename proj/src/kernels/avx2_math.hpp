#pragma once

// 4-lane double precision exp/log for the AVX2 kernels. Standard
// Cephes-style argument reduction and rational approximations; accuracy is
// within a few ulp of the libm scalars, which the equivalence tests pin.

#include <immintrin.h>

namespace bgev::kernels::avx2_math {

inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d max_x = _mm256_set1_pd(709.437);
  const __m256d min_x = _mm256_set1_pd(-708.396);

  x = _mm256_min_pd(_mm256_max_pd(x, min_x), max_x);

  __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, c1, x);
  r = _mm256_fnmadd_pd(n, c2, r);
  const __m256d rr = _mm256_mul_pd(r, r);

  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, r);

  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.0));

  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // scale by 2^n
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i pow2 =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(e, _mm256_castsi256_pd(pow2));
}

inline __m256d int64_to_pd(__m256i v) {
  // values are small exponents; go through 32-bit lanes
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i packed = _mm_unpacklo_epi64(
      _mm_shuffle_epi32(lo, _MM_SHUFFLE(3, 1, 2, 0)),
      _mm_shuffle_epi32(hi, _MM_SHUFFLE(3, 1, 2, 0)));
  return _mm256_cvtepi32_pd(packed);
}

// log(x) for strictly positive, finite, normal x. Lanes must be
// pre-masked to a safe value if invalid.
inline __m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_mask = _mm256_set1_epi64x(0x7ff0000000000000ll);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffll);
  const __m256i half_exp = _mm256_set1_epi64x(0x3fe0000000000000ll);

  // exponent e and mantissa m in [0.5, 1)
  __m256i e64 = _mm256_srli_epi64(_mm256_and_si256(bits, exp_mask), 52);
  e64 = _mm256_sub_epi64(e64, _mm256_set1_epi64x(1022));
  __m256d m =
      _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask),
                                          half_exp));
  // shift m into [sqrt(1/2), sqrt(2))
  const __m256d sqrt_half = _mm256_set1_pd(0.70710678118654752440);
  const __m256d below = _mm256_cmp_pd(m, sqrt_half, _CMP_LT_OQ);
  m = _mm256_add_pd(m, _mm256_and_pd(below, m));  // m *= 2 where below
  const __m256d e =
      _mm256_sub_pd(int64_to_pd(e64), _mm256_and_pd(below, _mm256_set1_pd(1.0)));

  const __m256d z = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(4.97494994976747001425e-1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(4.70579119878881725854e0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.44989225341610930846e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.79368678507819816313e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(7.70838733755885391666e0));

  __m256d q = _mm256_add_pd(z, _mm256_set1_pd(1.12873587189167450590e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(4.52279145837532221105e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(8.29875266912776603211e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(7.11544750618563894466e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(2.31251620126765340583e1));

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(z, zz), _mm256_div_pd(p, q));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, y);
  __m256d res = _mm256_add_pd(z, y);
  res = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), res);
  return res;
}

}  // namespace bgev::kernels::avx2_math
