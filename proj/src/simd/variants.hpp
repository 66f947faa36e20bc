#pragma once

// Internal: per-ISA kernel entry points. Kept free of std templates so the
// AVX2 translation unit never emits inline library code with AVX encodings.

#include <cstddef>

#include "osc/simd/kernels.hpp"

namespace osc::simd::scalar {
void laguerre(int n, double alpha, const double* x, double* out, std::size_t count);
void ladder_sum(const LadderSumArgs& args);
void matmul_dd(const double* a_hi, const double* a_lo, const double* b_hi, const double* b_lo, double* c_hi,
               double* c_lo, std::size_t n);
double weighted_dot(const double* w, const double* f, const double* g, std::size_t count);
}  // namespace osc::simd::scalar

#if defined(OSC_HAVE_AVX2)
namespace osc::simd::avx2 {
void laguerre(int n, double alpha, const double* x, double* out, std::size_t count);
void ladder_sum(const LadderSumArgs& args);
void matmul_dd(const double* a_hi, const double* a_lo, const double* b_hi, const double* b_lo, double* c_hi,
               double* c_lo, std::size_t n);
double weighted_dot(const double* w, const double* f, const double* g, std::size_t count);
}  // namespace osc::simd::avx2
#endif
