#include "osc/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "osc/error.hpp"

namespace osc {

namespace {

// Stirling series coefficients B_2j / (2j (2j - 1)), j = 1..8.
constexpr std::array<long double, 8> kStirling = {
    1.0L / 12.0L, -1.0L / 360.0L, 1.0L / 1260.0L, -1.0L / 1680.0L,
    1.0L / 1188.0L, -691.0L / 360360.0L, 1.0L / 156.0L, -3617.0L / 122400.0L,
};
constexpr long double kStirlingFrom = 16.0L;

// Ascending series for I_alpha(z) split as exp(log_prefactor + log_scale) * sum.
struct BesselSeries {
  double log_prefactor;
  double log_scale;
  double sum;
};

BesselSeries bessel_series(double alpha, double z) {
  constexpr double kRelTerm = 1e-18;
  constexpr double kRescale = 1e280;
  constexpr int kMaxTerms = 100000;

  const double q = 0.25 * z * z;
  BesselSeries s{alpha * std::log(0.5 * z) - log_gamma(alpha + 1.0), 0.0, 1.0};
  double term = 1.0;
  for (int m = 0; m < kMaxTerms; ++m) {
    const double ratio = q / ((m + 1.0) * (m + alpha + 1.0));
    term *= ratio;
    s.sum += term;
    if (ratio < 1.0 && term < kRelTerm * s.sum) break;
    if (s.sum > kRescale) {
      s.sum /= kRescale;
      term /= kRescale;
      s.log_scale += std::log(kRescale);
    }
  }
  return s;
}

void require_order(double alpha) {
  if (!(alpha > -1.0)) throw ValidationError("Bessel/Laguerre order must exceed -1, got " + std::to_string(alpha));
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw ValidationError("log_gamma requires x > 0, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  // Shift up to the Stirling range, then evaluate in extended precision so the
  // result is close to correctly rounded.
  long double z = x;
  long double shift = 1.0L;
  while (z < kStirlingFrom) shift *= z++;
  const long double inv = 1.0L / z;
  const long double inv2 = inv * inv;
  long double tail = 0.0L;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) tail = tail * inv2 + *it;
  const long double half_log_two_pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>((z - 0.5L) * std::log(z) - z + half_log_two_pi + tail * inv - std::log(shift));
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw ValidationError("Laguerre degree must be nonnegative");
  require_order(alpha);
  if (x < 0.0) throw ValidationError("Laguerre argument must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n == 0) {
    require_order(alpha);
    return 0.0;
  }
  return -laguerre(n - 1, alpha + 1.0, x);
}

double bessel_i(double alpha, double z) {
  require_order(alpha);
  if (z < 0.0) throw ValidationError("bessel_i requires z >= 0");
  if (z == 0.0) {
    if (alpha > 0.0) return 0.0;
    if (alpha == 0.0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  const BesselSeries s = bessel_series(alpha, z);
  if (s.log_scale == 0.0) return std::exp(s.log_prefactor) * s.sum;
  return std::exp(s.log_prefactor + s.log_scale + std::log(s.sum));
}

double log_bessel_i(double alpha, double z) {
  require_order(alpha);
  if (!(z > 0.0)) throw ValidationError("log_bessel_i requires z > 0");
  const BesselSeries s = bessel_series(alpha, z);
  return s.log_prefactor + s.log_scale + std::log(s.sum);
}

double hermite(int n, double x) {
  if (n < 0) throw ValidationError("Hermite degree must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace osc
