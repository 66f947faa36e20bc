#pragma once

// Radial wave functions in the rescaled coordinate r (r = sqrt(M omega) |x|).
// Inner products carry the radial measure r^{N-1} dr; the angular factor is
// divided out. For N = 1 the radial functions are normalized on the half line.

#include <optional>
#include <span>
#include <vector>

#include "osc/coherent.hpp"
#include "osc/quadrature.hpp"

namespace osc {

/// Strictly increasing sample points r >= 0.
class RadialGrid {
 public:
  static RadialGrid from_points(std::vector<double> points);
  /// r_min, r_min + step, ... up to and including r_max (within step / 2).
  static RadialGrid uniform(double r_min, double r_max, double step);
  static RadialGrid from_rule(const QuadratureRule& rule) { return from_points(rule.nodes); }

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }

 private:
  explicit RadialGrid(std::vector<double> points) : points_(std::move(points)) {}
  std::vector<double> points_;
};

inline constexpr double kDefaultGridStep = 1e-3;

/// sqrt(2(2n + l) + N) + 8: classical turning point of level n plus Gaussian tail.
double eigenfunction_rmax(const AlgebraParams& params, int n);
/// 2 sqrt(k) + 8
double coherent_rmax(double k);
/// sqrt(2 E_max / omega) + 10 for quadratures over levels up to n_max.
double quadrature_rmax(const AlgebraParams& params, int n_max);

struct RadialFunction {
  RadialGrid grid;
  std::vector<Complex> values;
  AlgebraParams params;
  std::optional<int> level;      // n for energy eigenfunctions
  std::optional<Complex> label;  // k for coherent states
  double time = 0.0;
};

/// r^{N-1} |psi(r)|^2 sampled on a grid.
struct RadialDensity {
  RadialGrid grid;
  std::vector<double> values;
  AlgebraParams params;
  Complex label;
  double time = 0.0;
};

/// (-1)^n [2 n! / Gamma(n + alpha + 1)]^{1/2}
double eigenfunction_prefactor(const AlgebraParams& params, int n);

/// psi_{n l}(r) = (-1)^n [2 n!/Gamma(n+alpha+1)]^{1/2} r^l e^{-r^2/2} L_n^(alpha)(r^2)
RadialFunction eigenfunction(const AlgebraParams& params, int n, const RadialGrid& grid);

/// Max |<psi_n|psi_m> - delta_nm| over n, m <= max_level, integrated with `rule`.
double orthonormality_defect(const AlgebraParams& params, int max_level, const QuadratureRule& rule);

/// Max residual of (l/2 - r/2 d/dr - r^2/2) psi over interior grid points, by
/// three-point differences, relative to max |psi|. Zero for the zero function.
double first_order_residual(const AlgebraParams& params, std::span<const double> psi, const RadialGrid& grid);
double ground_state_ode_residual(const AlgebraParams& params, const RadialGrid& grid);

/// Max |-(n+alpha+1-x+x d/dx) L_n^(alpha)(x) + (n+1) L_{n+1}^(alpha)(x)| over xs.
double ladder_recurrence_check(double alpha, int n, std::span<const double> xs);
/// Same identity evaluated at x = r^2 for the grid points.
double ladder_recurrence_check(const AlgebraParams& params, int n, const RadialGrid& grid);

/// Max |J3 psi - (n + m0) psi| / max |psi| over interior points, with J3 in
/// radial form (1/4)(-psi'' - (N-1)/r psi' + l(l+N-2)/r^2 psi + r^2 psi).
double energy_residual(const AlgebraParams& params, int n, const RadialGrid& grid);

/// Closed form <r|k> = r^{1-N/2} e^{-r^2/2} [2 Gamma(1+alpha)]^{1/2} e^{-k} I_alpha(2 r sqrt(k)) k^{-alpha/2}
/// for real k > 0. The r = 0 value is the analytic limit.
RadialFunction coherent_wavefunction(const AlgebraParams& params, double k, const RadialGrid& grid);

/// sum_n c_n psi_{n l}(r) via the normalized ladder recurrence. Accepts complex labels.
/// Throws ConvergenceError for unconverged states.
RadialFunction coherent_wavefunction_series(const CoherentState& state, const RadialGrid& grid);

/// r^{N-1} |<r|k>_t|^2 using the evolved label k exp(-2 i omega t).
RadialDensity density_evolution(const AlgebraParams& params, Complex k, double t, const RadialGrid& grid,
                                int n_max = kDefaultNMax);

/// max_t |P(t) - P(0)| / P(0) for P(t) = int r^{N-1} |<r|k>_t|^2 dr, over `frames`
/// equally spaced times spanning one period pi / omega. Integrated with a
/// composite Gauss-Legendre rule on [0, coherent_rmax(|k|)].
double density_norm_drift(const AlgebraParams& params, Complex k, int frames, int n_max = kDefaultNMax);

struct AsymptoticReport {
  double expected_center = 0.0;  // 2 sqrt(k) cos(omega t)
  double fitted_center = 0.0;
  double fitted_width = 0.0;      // w in exp(-(r - c)^2 / w^2); 1 in the limit
  double peak_deviation = 0.0;    // relative deviation at the density maximum
  double window_deviation = 0.0;  // max relative deviation over the comparison window
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// Compares r^{N-1}|<r|k>_t|^2 / <k|k> with (1/sqrt(pi)) exp(-(r - 2 sqrt(k) cos(omega t))^2)
/// over [c - 3, c + 3] restricted to r > sqrt(k).
AsymptoticReport asymptotic_gaussian_check(const AlgebraParams& params, double k, double t, int n_max = 256,
                                           double step = kDefaultGridStep);

struct N1DensityReport {
  std::vector<double> xs;
  std::vector<double> series;  // one-dimensional convention (full line, odd state scaled by sqrt(2k))
  std::vector<double> closed;  // two displaced Gaussians with phases, squared modulus
  double max_rel_deviation = 0.0;
};

/// One-dimensional densities |<x|k>_t|^2 for a parity sector at signed points xs.
N1DensityReport n1_density(const AlgebraParams& params, double k, double t, std::span<const double> xs,
                           int n_max = kDefaultNMax);

/// Unified one-dimensional eigenfunction [2^n n!]^{-1/2} pi^{-1/4} H_n(x) e^{-x^2/2}.
double hermite_function(int n, double x);

}  // namespace osc
