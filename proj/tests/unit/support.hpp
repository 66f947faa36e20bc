#pragma once

// Seeded generators for the property tests. Every property runs a fixed
// number of cases from a fixed seed so failures reproduce exactly.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

#include "osc/algebra.hpp"

namespace osc::testing {

inline constexpr int kCases = 200;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Uniform in the disk |z| <= radius.
  std::complex<double> disk(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// Valid (N, l): N in [1, max_dim], l a parity tag for N = 1.
  std::pair<int, int> dim_ell(int max_dim, int max_ell) {
    const int dim = integer(1, max_dim);
    return {dim, integer(0, dim == 1 ? 1 : max_ell)};
  }

  AlgebraParams params(int max_dim = 6, int max_ell = 6) {
    const auto [dim, ell] = dim_ell(max_dim, max_ell);
    return make_params(dim, ell, uniform(0.25, 4.0));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace osc::testing
