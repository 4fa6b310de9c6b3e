#include "nct/kernels/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace nct::kernels::avx2 {

namespace {

/// Cephes-style exp: range reduction by ln 2, Padé form on [−ln2/2, ln2/2].
__m256d exp_pd(__m256d x) {
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93145751953125E-1), x);
  x = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.42860682030941723212E-6), x);

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d p = _mm256_set1_pd(1.26177193074810590878E-4);
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300E-2));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910E-1));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_set1_pd(3.00198505138664455042E-6);
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192E-3));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766E-1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009E0));
  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_fmadd_pd(r, _mm256_set1_pd(2.0), _mm256_set1_pd(1.0));

  // scale by 2^n through the exponent field
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i bits = _mm256_cvtepi32_epi64(n32);
  bits = _mm256_slli_epi64(_mm256_add_epi64(bits, _mm256_set1_epi64x(1023)), 52);
  r = _mm256_mul_pd(r, _mm256_castsi256_pd(bits));
  return _mm256_andnot_pd(underflow, r);
}

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights) {
  auto* d = reinterpret_cast<double*>(data.data());
  const std::size_t n = data.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // (w0, w0, w1, w1) against (re0, im0, re1, im1)
    const __m128d w = _mm_loadu_pd(weights.data() + i);
    const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w), 0b01010000);
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), ww));
  }
  for (; i < n; ++i) data[i] *= weights[i];
}

double sum_exp_neg(double t, std::span<const double> values) {
  const __m256d mt = _mm256_set1_pd(-t);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= values.size(); i += 4) acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(mt, _mm256_loadu_pd(values.data() + i))));
  double sum = horizontal_sum(acc);
  for (; i < values.size(); ++i) sum += std::exp(-t * values[i]);
  return sum;
}

double sum_abs2(std::span<const std::complex<double>> data) {
  const auto* d = reinterpret_cast<const double*>(data.data());
  const std::size_t n = 2 * data.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(d + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double sum = horizontal_sum(acc);
  for (; i < n; ++i) sum += d[i] * d[i];
  return sum;
}

}  // namespace nct::kernels::avx2
