#include <cassert>
#include <cstdlib>
#include <cstring>

#include "osc/simd/kernels.hpp"
#include "variants.hpp"

namespace osc::simd {

namespace {

constexpr KernelTable kScalarTable{Isa::Scalar, &scalar::laguerre, &scalar::ladder_sum, &scalar::matmul_dd,
                                   &scalar::weighted_dot};

#if defined(OSC_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::Avx2, &avx2::laguerre, &avx2::ladder_sum, &avx2::matmul_dd,
                                 &avx2::weighted_dot};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Isa select_isa() {
  if (const char* forced = std::getenv("OSC_SIMD"); forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(OSC_HAVE_AVX2)
    {
      static const bool has = cpu_has_avx2();
      return has;
    }
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

const KernelTable& kernels(Isa isa) {
#if defined(OSC_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return kAvx2Table;
#else
  (void)isa;
#endif
  return kScalarTable;
}

const KernelTable& kernels() { return kernels(active_isa()); }

void laguerre(int n, double alpha, std::span<const double> x, std::span<double> out, Isa isa) {
  assert(out.size() >= x.size());
  kernels(isa).laguerre(n, alpha, x.data(), out.data(), x.size());
}

void matmul_dd(SplitMatrixView a, SplitMatrixView b, std::span<double> c_hi, std::span<double> c_lo,
               std::size_t order, Isa isa) {
  const std::size_t size = order * order;
  assert(a.hi.size() == size && a.lo.size() == size && b.hi.size() == size && b.lo.size() == size);
  assert(c_hi.size() == size && c_lo.size() == size);
  (void)size;
  kernels(isa).matmul_dd(a.hi.data(), a.lo.data(), b.hi.data(), b.lo.data(), c_hi.data(), c_lo.data(), order);
}

double weighted_dot(std::span<const double> w, std::span<const double> f, std::span<const double> g, Isa isa) {
  assert(w.size() == f.size() && f.size() == g.size());
  return kernels(isa).weighted_dot(w.data(), f.data(), g.data(), w.size());
}

}  // namespace osc::simd
