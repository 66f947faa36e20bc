// Compiled with -mavx2 -mfma. Only reached after a runtime CPUID check.

#include <immintrin.h>

#include "double_double.hpp"
#include "variants.hpp"

namespace osc::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d negate(__m256d v) { return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); }

}  // namespace

void laguerre(int n, double alpha, const double* x, double* out, std::size_t count) {
  std::size_t i = 0;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d one_plus_alpha = _mm256_set1_pd(1.0 + alpha);
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    __m256d prev = one;
    if (n == 0) {
      _mm256_storeu_pd(out + i, prev);
      continue;
    }
    __m256d cur = _mm256_sub_pd(one_plus_alpha, xv);
    for (int k = 1; k < n; ++k) {
      const __m256d b = _mm256_sub_pd(_mm256_set1_pd(2.0 * k + 1.0 + alpha), xv);
      const __m256d c = _mm256_set1_pd(k + alpha);
      const __m256d d = _mm256_set1_pd(k + 1.0);
      const __m256d next = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(b, cur), _mm256_mul_pd(c, prev)), d);
      prev = cur;
      cur = next;
    }
    _mm256_storeu_pd(out + i, cur);
  }
  if (i < count) scalar::laguerre(n, alpha, x + i, out + i, count - i);
}

void ladder_sum(const LadderSumArgs& a) {
  std::size_t i = 0;
  for (; i + kLanes <= a.points; i += kLanes) {
    const __m256d xv = _mm256_loadu_pd(a.x + i);
    __m256d prev = _mm256_setzero_pd();
    __m256d cur = _mm256_loadu_pd(a.seed + i);
    __m256d acc_re = _mm256_mul_pd(_mm256_set1_pd(a.coeff_re[0]), cur);
    __m256d acc_im = _mm256_mul_pd(_mm256_set1_pd(a.coeff_im[0]), cur);
    for (std::size_t n = 0; n + 1 < a.terms; ++n) {
      const __m256d b = _mm256_sub_pd(_mm256_set1_pd(2.0 * n + 1.0 + a.alpha), xv);
      const __m256d sum = _mm256_add_pd(_mm256_mul_pd(b, cur), _mm256_mul_pd(_mm256_set1_pd(a.s_minus[n]), prev));
      const __m256d next = _mm256_div_pd(negate(sum), _mm256_set1_pd(a.s_plus[n]));
      prev = cur;
      cur = next;
      acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(_mm256_set1_pd(a.coeff_re[n + 1]), cur));
      acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(_mm256_set1_pd(a.coeff_im[n + 1]), cur));
    }
    _mm256_storeu_pd(a.out_re + i, acc_re);
    _mm256_storeu_pd(a.out_im + i, acc_im);
  }
  if (i < a.points) {
    LadderSumArgs tail = a;
    tail.x += i;
    tail.seed += i;
    tail.points -= i;
    tail.out_re += i;
    tail.out_im += i;
    scalar::ladder_sum(tail);
  }
}

void matmul_dd(const double* a_hi, const double* a_lo, const double* b_hi, const double* b_lo, double* c_hi,
               double* c_lo, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c_hi[i] = c_lo[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* row_hi = c_hi + i * n;
    double* row_lo = c_lo + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ah = a_hi[i * n + k];
      const double al = a_lo[i * n + k];
      if (ah == 0.0 && al == 0.0) continue;
      const __m256d ahv = _mm256_set1_pd(ah);
      const __m256d alv = _mm256_set1_pd(al);
      const double* bh_row = b_hi + k * n;
      const double* bl_row = b_lo + k * n;
      std::size_t j = 0;
      for (; j + kLanes <= n; j += kLanes) {
        const __m256d bh = _mm256_loadu_pd(bh_row + j);
        const __m256d bl = _mm256_loadu_pd(bl_row + j);
        // product: two_prod then quick_two_sum
        const __m256d p = _mm256_mul_pd(ahv, bh);
        const __m256d pe = _mm256_add_pd(_mm256_fmsub_pd(ahv, bh, p),
                                         _mm256_add_pd(_mm256_mul_pd(ahv, bl), _mm256_mul_pd(alv, bh)));
        const __m256d ph = _mm256_add_pd(p, pe);
        const __m256d pl = _mm256_sub_pd(pe, _mm256_sub_pd(ph, p));
        // accumulate: two_sum then quick_two_sum
        const __m256d ch = _mm256_loadu_pd(row_hi + j);
        const __m256d cl = _mm256_loadu_pd(row_lo + j);
        const __m256d s = _mm256_add_pd(ch, ph);
        const __m256d bb = _mm256_sub_pd(s, ch);
        const __m256d se = _mm256_add_pd(_mm256_sub_pd(ch, _mm256_sub_pd(s, bb)), _mm256_sub_pd(ph, bb));
        const __m256d e = _mm256_add_pd(se, _mm256_add_pd(cl, pl));
        const __m256d hi = _mm256_add_pd(s, e);
        _mm256_storeu_pd(row_hi + j, hi);
        _mm256_storeu_pd(row_lo + j, _mm256_sub_pd(e, _mm256_sub_pd(hi, s)));
      }
      for (; j < n; ++j) {
        const dd::Pair p = dd::mul(ah, al, bh_row[j], bl_row[j]);
        const dd::Pair s = dd::add(row_hi[j], row_lo[j], p.hi, p.lo);
        row_hi[j] = s.hi;
        row_lo[j] = s.lo;
      }
    }
  }
}

double weighted_dot(const double* w, const double* f, const double* g, std::size_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 * kLanes <= count; i += 2 * kLanes) {
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(f + i));
    const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(w + i + kLanes), _mm256_loadu_pd(f + i + kLanes));
    acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(g + i), acc0);
    acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(g + i + kLanes), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; i < count; ++i) sum += w[i] * f[i] * g[i];
  return sum;
}

}  // namespace osc::simd::avx2
