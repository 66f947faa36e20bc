#include "double_double.hpp"
#include "variants.hpp"

namespace osc::simd::scalar {

void laguerre(int n, double alpha, const double* x, double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    double prev = 1.0;
    if (n == 0) {
      out[i] = prev;
      continue;
    }
    double cur = 1.0 + alpha - x[i];
    for (int k = 1; k < n; ++k) {
      double next = ((2.0 * k + 1.0 + alpha - x[i]) * cur - (k + alpha) * prev) / (k + 1.0);
      prev = cur;
      cur = next;
    }
    out[i] = cur;
  }
}

void ladder_sum(const LadderSumArgs& a) {
  for (std::size_t i = 0; i < a.points; ++i) {
    double prev = 0.0;
    double cur = a.seed[i];
    double acc_re = a.coeff_re[0] * cur;
    double acc_im = a.coeff_im[0] * cur;
    for (std::size_t n = 0; n + 1 < a.terms; ++n) {
      double next = -((2.0 * n + 1.0 + a.alpha - a.x[i]) * cur + a.s_minus[n] * prev) / a.s_plus[n];
      prev = cur;
      cur = next;
      acc_re = acc_re + a.coeff_re[n + 1] * cur;
      acc_im = acc_im + a.coeff_im[n + 1] * cur;
    }
    a.out_re[i] = acc_re;
    a.out_im[i] = acc_im;
  }
}

void matmul_dd(const double* a_hi, const double* a_lo, const double* b_hi, const double* b_lo, double* c_hi,
               double* c_lo, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c_hi[i] = c_lo[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ah = a_hi[i * n + k];
      const double al = a_lo[i * n + k];
      if (ah == 0.0 && al == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const dd::Pair p = dd::mul(ah, al, b_hi[k * n + j], b_lo[k * n + j]);
        const dd::Pair s = dd::add(c_hi[i * n + j], c_lo[i * n + j], p.hi, p.lo);
        c_hi[i * n + j] = s.hi;
        c_lo[i * n + j] = s.lo;
      }
    }
  }
}

double weighted_dot(const double* w, const double* f, const double* g, std::size_t count) {
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += w[i] * f[i] * g[i];
  return sum;
}

}  // namespace osc::simd::scalar
