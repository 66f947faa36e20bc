#pragma once

// Special functions used by the oscillator library. All arguments are real.

namespace osc {

/// ln Gamma(x) for x > 0 (Lanczos, g = 607/128).
double log_gamma(double x);

/// Associated Laguerre polynomial L_n^(alpha)(x), alpha > -1, x >= 0, by the
/// upward three-term recurrence.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^(alpha)(x) = -L_{n-1}^(alpha+1)(x).
double laguerre_derivative(int n, double alpha, double x);

/// Modified Bessel function of the first kind I_alpha(z) for alpha > -1, z >= 0,
/// from the ascending series. At z = 0 returns 0 (alpha > 0), 1 (alpha = 0) or
/// +inf (alpha < 0).
double bessel_i(double alpha, double z);

/// ln I_alpha(z) for z > 0. Usable where I_alpha itself would overflow.
double log_bessel_i(double alpha, double z);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

}  // namespace osc
