#pragma once

// Data-parallel inner loops shared by the library.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is chosen once at runtime from CPUID; setting the
// environment variable OSC_SIMD=scalar forces the reference path.
//
// laguerre, ladder_sum and matmul_dd evaluate the same operation sequence per
// lane as the scalar code and match it bit for bit. weighted_dot reassociates
// the sum, so it agrees with the reference only to rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace osc::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Best available variant, honoring the OSC_SIMD override.
Isa active_isa();

/// Inputs of the normalized ladder recurrence
///   psi_{n+1} = -[(2n+1+alpha-x) psi_n + s_minus[n] psi_{n-1}] / s_plus[n]
/// accumulated as sum_n (coeff_re[n] + i coeff_im[n]) psi_n(x).
struct LadderSumArgs {
  double alpha = 0.0;
  const double* x = nullptr;     // squared radius per point
  const double* seed = nullptr;  // psi_0 per point
  std::size_t points = 0;
  const double* s_plus = nullptr;   // sigma_n^+, n = 0..terms-2
  const double* s_minus = nullptr;  // sigma_n^-, n = 0..terms-2
  const double* coeff_re = nullptr;
  const double* coeff_im = nullptr;
  std::size_t terms = 0;
  double* out_re = nullptr;
  double* out_im = nullptr;
};

struct KernelTable {
  Isa isa;
  // out[i] = L_n^(alpha)(x[i]) by the upward three-term recurrence.
  void (*laguerre)(int n, double alpha, const double* x, double* out, std::size_t count);
  void (*ladder_sum)(const LadderSumArgs& args);
  // c = a * b for row-major square matrices of order n held as unevaluated
  // sums hi + lo (double-double), using error-free products and sums.
  void (*matmul_dd)(const double* a_hi, const double* a_lo, const double* b_hi, const double* b_lo, double* c_hi,
                    double* c_lo, std::size_t n);
  // sum_i w[i] f[i] g[i]
  double (*weighted_dot)(const double* w, const double* f, const double* g, std::size_t count);
};

/// Kernel table for a specific variant; falls back to scalar if unavailable.
const KernelTable& kernels(Isa isa);
const KernelTable& kernels();

void laguerre(int n, double alpha, std::span<const double> x, std::span<double> out,
              Isa isa = active_isa());

/// Split operand of matmul_dd.
struct SplitMatrixView {
  std::span<const double> hi;
  std::span<const double> lo;
};

void matmul_dd(SplitMatrixView a, SplitMatrixView b, std::span<double> c_hi, std::span<double> c_lo,
               std::size_t order, Isa isa = active_isa());

double weighted_dot(std::span<const double> w, std::span<const double> f,
                    std::span<const double> g, Isa isa = active_isa());

}  // namespace osc::simd
