#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "osc/algebra.hpp"
#include "osc/simd/kernels.hpp"
#include "support.hpp"

namespace {

using namespace osc;
using osc::simd::Isa;
using osc::testing::Gen;

bool have_avx2() { return simd::isa_available(Isa::Avx2); }

std::vector<double> random_vector(Gen& gen, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = gen.uniform(lo, hi);
  return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(Dispatch, TablesAndNames) {
  EXPECT_EQ(simd::isa_name(Isa::Scalar), "scalar");
  EXPECT_EQ(simd::isa_name(Isa::Avx2), "avx2");
  EXPECT_TRUE(simd::isa_available(Isa::Scalar));
  EXPECT_EQ(simd::kernels(Isa::Scalar).isa, Isa::Scalar);
  // Unavailable variants fall back to scalar.
  EXPECT_EQ(simd::kernels(Isa::Avx2).isa, have_avx2() ? Isa::Avx2 : Isa::Scalar);
}

TEST(Equivalence, LaguerreBitExact) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2";
  Gen gen(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = static_cast<std::size_t>(gen.integer(0, 37));
    const int n = gen.integer(0, 40);
    const double alpha = gen.uniform(-0.9, 8.0);
    const std::vector<double> x = random_vector(gen, count, 0.0, 30.0);
    std::vector<double> a(count), b(count);
    simd::laguerre(n, alpha, x, a, Isa::Scalar);
    simd::laguerre(n, alpha, x, b, Isa::Avx2);
    EXPECT_TRUE(bit_equal(a, b)) << n << ' ' << alpha << ' ' << count;
  }
}

TEST(Equivalence, LadderSumBitExact) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2";
  Gen gen(62);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t points = static_cast<std::size_t>(gen.integer(1, 41));
    const std::size_t terms = static_cast<std::size_t>(gen.integer(1, 90));
    const double alpha = gen.params().alpha();
    const std::vector<double> x = random_vector(gen, points, 0.0, 40.0);
    const std::vector<double> seed = random_vector(gen, points, -1.0, 1.0);
    std::vector<double> sp(terms), sm(terms);
    for (std::size_t n = 0; n < terms; ++n) {
      sp[n] = sigma_plus(alpha, static_cast<int>(n));
      sm[n] = sigma_minus(alpha, static_cast<int>(n));
    }
    const std::vector<double> cre = random_vector(gen, terms, -1.0, 1.0);
    const std::vector<double> cim = random_vector(gen, terms, -1.0, 1.0);
    std::vector<double> out[2][2] = {{std::vector<double>(points), std::vector<double>(points)},
                                     {std::vector<double>(points), std::vector<double>(points)}};
    for (int v = 0; v < 2; ++v) {
      simd::LadderSumArgs args;
      args.alpha = alpha;
      args.x = x.data();
      args.seed = seed.data();
      args.points = points;
      args.s_plus = sp.data();
      args.s_minus = sm.data();
      args.coeff_re = cre.data();
      args.coeff_im = cim.data();
      args.terms = terms;
      args.out_re = out[v][0].data();
      args.out_im = out[v][1].data();
      simd::kernels(v == 0 ? Isa::Scalar : Isa::Avx2).ladder_sum(args);
    }
    EXPECT_TRUE(bit_equal(out[0][0], out[1][0]));
    EXPECT_TRUE(bit_equal(out[0][1], out[1][1]));
  }
}

TEST(Equivalence, MatmulDdBitExact) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2";
  Gen gen(63);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 23));
    std::vector<double> ah = random_vector(gen, n * n, -3.0, 3.0);
    std::vector<double> bh = random_vector(gen, n * n, -3.0, 3.0);
    std::vector<double> al(n * n), bl(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      al[i] = ah[i] * gen.uniform(-1e-16, 1e-16);
      bl[i] = bh[i] * gen.uniform(-1e-16, 1e-16);
      if (gen.integer(0, 3) == 0) ah[i] = al[i] = 0.0;  // exercise the zero skip
    }
    std::vector<double> ch[2] = {std::vector<double>(n * n), std::vector<double>(n * n)};
    std::vector<double> cl[2] = {std::vector<double>(n * n), std::vector<double>(n * n)};
    for (int v = 0; v < 2; ++v) {
      simd::matmul_dd({ah, al}, {bh, bl}, ch[v], cl[v], n, v == 0 ? Isa::Scalar : Isa::Avx2);
    }
    EXPECT_TRUE(bit_equal(ch[0], ch[1])) << n;
    EXPECT_TRUE(bit_equal(cl[0], cl[1])) << n;
  }
}

TEST(Equivalence, WeightedDotWithinRounding) {
  if (!have_avx2()) GTEST_SKIP() << "no AVX2";
  Gen gen(64);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = static_cast<std::size_t>(gen.integer(0, 3000));
    const std::vector<double> w = random_vector(gen, count, 0.0, 1.0);
    const std::vector<double> f = random_vector(gen, count, -1.0, 1.0);
    const std::vector<double> g = random_vector(gen, count, -1.0, 1.0);
    double magnitude = 0.0;
    for (std::size_t i = 0; i < count; ++i) magnitude += std::abs(w[i] * f[i] * g[i]);
    const double a = simd::weighted_dot(w, f, g, Isa::Scalar);
    const double b = simd::weighted_dot(w, f, g, Isa::Avx2);
    EXPECT_LE(std::abs(a - b), 4.0 * count * 1.2e-16 * magnitude + 1e-300);
  }
}

TEST(MatmulDd, AgreesWithLongDouble) {
  Gen gen(65);
  const std::size_t n = 9;
  const std::vector<double> a = random_vector(gen, n * n, -1.0, 1.0);
  const std::vector<double> b = random_vector(gen, n * n, -1.0, 1.0);
  const std::vector<double> zero(n * n, 0.0);
  std::vector<double> hi(n * n), lo(n * n);
  simd::matmul_dd({a, zero}, {b, zero}, hi, lo, n, Isa::Scalar);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long double ref = 0.0L;
      for (std::size_t k = 0; k < n; ++k) ref += static_cast<long double>(a[i * n + k]) * b[k * n + j];
      EXPECT_LE(std::abs(static_cast<long double>(hi[i * n + j]) + lo[i * n + j] - ref), 1e-18L);
    }
}

}  // namespace
