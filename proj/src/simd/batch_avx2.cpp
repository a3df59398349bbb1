// AVX2/FMA variants of the batch primitives. Four doubles per lane, FMA for
// the distance accumulation, and a Cephes-style polynomial exp so the whole
// array goes through one code path. Tail elements reuse the same per-element
// operations (std::fma, padded vector exp) so a value does not depend on its
// position within the array.

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <cstring>

#include "tables.hpp"

namespace socgrad::simd::detail {
namespace {

// exp for 4 doubles: n = round(x/ln2), r = x - n*ln2 (split constant), then
// the degree-4/4 rational approximation exp(r) = 1 + 2 r P(r^2) / (Q(r^2) -
// r P(r^2)) scaled by 2^n. Accurate to ~1 ulp over the clamped range; inputs
// below -708 flush to zero (true value < 3.4e-308).
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d ln2_hi = _mm256_set1_pd(0.693145751953125);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d hi = _mm256_set1_pd(709.0);

  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  const __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d nd = _mm256_round_pd(
      _mm256_mul_pd(xc, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(nd, ln2_hi, xc);
  r = _mm256_fnmadd_pd(nd, ln2_lo, r);
  const __m256d z = _mm256_mul_pd(r, r);

  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, r);

  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(2.0));

  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(e, _mm256_set1_pd(2.0), _mm256_set1_pd(1.0));

  // scale by 2^n via the exponent field; n is within [-1022, 1023] here
  const __m128i n32 = _mm256_cvtpd_epi32(nd);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i pow2 =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(pow2));

  return _mm256_andnot_pd(underflow, e);
}

void sq_accum(const double* col, double q, double scale, double* acc,
              std::size_t len) {
  const __m256d qv = _mm256_set1_pd(q);
  const __m256d sv = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(col + i), qv);
    const __m256d a = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(sv, _mm256_mul_pd(d, d), a));
  }
  for (; i < len; ++i) {
    const double d = col[i] - q;
    acc[i] = std::fma(scale, d * d, acc[i]);
  }
}

void exp_neg(const double* acc, double scale, double* out, std::size_t len) {
  const __m256d cv = _mm256_set1_pd(-scale);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(out + i, exp_pd(_mm256_mul_pd(cv, _mm256_loadu_pd(acc + i))));
  }
  if (i < len) {
    double buf[4] = {0.0, 0.0, 0.0, 0.0};
    std::memcpy(buf, acc + i, (len - i) * sizeof(double));
    _mm256_storeu_pd(buf, exp_pd(_mm256_mul_pd(cv, _mm256_loadu_pd(buf))));
    std::memcpy(out + i, buf, (len - i) * sizeof(double));
  }
}

void mul2(const double* a, const double* b, double* w, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(w + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < len; ++i) {
    w[i] = a[i] * b[i];
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* w, const double* col, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(col + i), acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) {
    s = std::fma(w[i], col[i], s);
  }
  return s;
}

double sum(const double* w, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(w + i));
  }
  double s = hsum(acc);
  for (; i < len; ++i) {
    s += w[i];
  }
  return s;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops table{&sq_accum, &exp_neg, &mul2, &dot, &sum};
  return table;
}

}  // namespace socgrad::simd::detail
