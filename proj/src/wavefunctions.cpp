#include "osc/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "osc/error.hpp"
#include "osc/simd/kernels.hpp"
#include "osc/special_functions.hpp"

namespace osc {

namespace {

double int_pow(double x, int p) {
  double result = 1.0;
  for (int i = 0; i < p; ++i) result *= x;
  return result;
}

// Three-point derivatives on a possibly nonuniform grid, centred at i.
struct Stencil {
  double d1;
  double d2;
};

Stencil differentiate(std::span<const double> r, std::span<const double> f, std::size_t i) {
  const double h1 = r[i] - r[i - 1];
  const double h2 = r[i + 1] - r[i];
  const double d1 = -h2 / (h1 * (h1 + h2)) * f[i - 1] + (h2 - h1) / (h1 * h2) * f[i] + h1 / (h2 * (h1 + h2)) * f[i + 1];
  const double d2 = 2.0 * (f[i - 1] / (h1 * (h1 + h2)) - f[i] / (h1 * h2) + f[i + 1] / (h2 * (h1 + h2)));
  return {d1, d2};
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> real_eigenfunction(const AlgebraParams& params, int n, std::span<const double> r) {
  std::vector<double> x(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) x[i] = r[i] * r[i];
  std::vector<double> values(r.size());
  simd::laguerre(n, params.alpha(), x, values);
  const double prefactor = eigenfunction_prefactor(params, n);
  for (std::size_t i = 0; i < r.size(); ++i) {
    values[i] *= prefactor * int_pow(r[i], params.ell()) * std::exp(-0.5 * x[i]);
  }
  return values;
}

// sum_n c_n psi_n at signed coordinates, by the normalized ladder recurrence
// psi_{n+1} = -[(2n+1+alpha-x) psi_n + sigma_n^- psi_{n-1}] / sigma_n^+.
std::vector<Complex> ladder_series(const CoherentState& state, std::span<const double> coords) {
  if (!state.converged()) {
    throw ConvergenceError("coherent expansion not converged at n_max = " + std::to_string(state.n_max()) +
                           " (tail ratio " + std::to_string(state.tail_ratio()) + ")");
  }
  const AlgebraParams& params = state.params();
  const double alpha = params.alpha();
  const std::size_t terms = state.size();

  std::vector<double> s_plus(terms - 1);
  std::vector<double> s_minus(terms - 1);
  for (std::size_t n = 0; n + 1 < terms; ++n) {
    s_plus[n] = sigma_plus(alpha, static_cast<int>(n));
    s_minus[n] = sigma_minus(alpha, static_cast<int>(n));
  }
  std::vector<double> c_re(terms);
  std::vector<double> c_im(terms);
  for (std::size_t n = 0; n < terms; ++n) {
    const Complex c = state.coefficient(static_cast<int>(n));
    c_re[n] = c.real();
    c_im[n] = c.imag();
  }

  const double a0 = eigenfunction_prefactor(params, 0);
  std::vector<double> x(coords.size());
  std::vector<double> seed(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    x[i] = coords[i] * coords[i];
    seed[i] = a0 * int_pow(coords[i], params.ell()) * std::exp(-0.5 * x[i]);
  }

  std::vector<double> out_re(coords.size());
  std::vector<double> out_im(coords.size());
  simd::LadderSumArgs args;
  args.alpha = alpha;
  args.x = x.data();
  args.seed = seed.data();
  args.points = coords.size();
  args.s_plus = s_plus.data();
  args.s_minus = s_minus.data();
  args.coeff_re = c_re.data();
  args.coeff_im = c_im.data();
  args.terms = terms;
  args.out_re = out_re.data();
  args.out_im = out_im.data();
  simd::kernels().ladder_sum(args);

  std::vector<Complex> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = {out_re[i], out_im[i]};
  return out;
}

void require_positive_label(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw ValidationError("closed-form coherent functions need real k > 0");
}

}  // namespace

RadialGrid RadialGrid::from_points(std::vector<double> points) {
  if (points.empty()) throw ValidationError("radial grid must not be empty");
  if (!(points.front() >= 0.0)) throw ValidationError("radial grid must start at r >= 0");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) throw ValidationError("radial grid must be strictly increasing");
  }
  return RadialGrid(std::move(points));
}

RadialGrid RadialGrid::uniform(double r_min, double r_max, double step) {
  if (!(step > 0.0)) throw ValidationError("grid step must be positive");
  if (!(r_max >= r_min)) throw ValidationError("grid needs r_max >= r_min");
  const auto count = static_cast<std::size_t>(std::floor((r_max - r_min) / step + 0.5)) + 1;
  std::vector<double> points(count);
  for (std::size_t i = 0; i < count; ++i) points[i] = r_min + static_cast<double>(i) * step;
  return from_points(std::move(points));
}

double eigenfunction_rmax(const AlgebraParams& params, int n) {
  return std::sqrt(2.0 * (2.0 * n + params.ell()) + params.dim()) + 8.0;
}

double coherent_rmax(double k) { return 2.0 * std::sqrt(k) + 8.0; }

double quadrature_rmax(const AlgebraParams& params, int n_max) {
  return std::sqrt(2.0 * params.energy(n_max) / params.omega()) + 10.0;
}

double eigenfunction_prefactor(const AlgebraParams& params, int n) {
  if (n < 0) throw ValidationError("level n must be nonnegative");
  const double magnitude =
      std::exp(0.5 * (std::numbers::ln2 + log_gamma(n + 1.0) - log_gamma(n + params.alpha() + 1.0)));
  return n % 2 == 0 ? magnitude : -magnitude;
}

RadialFunction eigenfunction(const AlgebraParams& params, int n, const RadialGrid& grid) {
  const std::vector<double> real = real_eigenfunction(params, n, grid.points());
  RadialFunction f{grid, std::vector<Complex>(real.begin(), real.end()), params, n, std::nullopt, 0.0};
  return f;
}

double orthonormality_defect(const AlgebraParams& params, int max_level, const QuadratureRule& rule) {
  std::vector<double> weights(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    weights[i] = rule.weights[i] * int_pow(rule.nodes[i], params.dim() - 1);
  }
  std::vector<std::vector<double>> psi;
  for (int n = 0; n <= max_level; ++n) psi.push_back(real_eigenfunction(params, n, rule.nodes));
  double defect = 0.0;
  for (int n = 0; n <= max_level; ++n) {
    for (int m = n; m <= max_level; ++m) {
      const double inner = simd::weighted_dot(weights, psi[n], psi[m]);
      defect = std::max(defect, std::abs(inner - (n == m ? 1.0 : 0.0)));
    }
  }
  return defect;
}

double first_order_residual(const AlgebraParams& params, std::span<const double> psi, const RadialGrid& grid) {
  if (psi.size() != grid.size()) throw ValidationError("sample count does not match grid");
  const double scale = max_abs(psi);
  if (scale == 0.0 || grid.size() < 3) return 0.0;
  const auto r = grid.points();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double slope = differentiate(r, psi, i).d1;
    const double residual = 0.5 * params.ell() * psi[i] - 0.5 * r[i] * slope - 0.5 * r[i] * r[i] * psi[i];
    worst = std::max(worst, std::abs(residual));
  }
  return worst / scale;
}

double ground_state_ode_residual(const AlgebraParams& params, const RadialGrid& grid) {
  return first_order_residual(params, real_eigenfunction(params, 0, grid.points()), grid);
}

double ladder_recurrence_check(double alpha, int n, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) {
    const double lhs = -((n + alpha + 1.0 - x) * laguerre(n, alpha, x) + x * laguerre_derivative(n, alpha, x));
    const double rhs = -(n + 1.0) * laguerre(n + 1, alpha, x);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double ladder_recurrence_check(const AlgebraParams& params, int n, const RadialGrid& grid) {
  std::vector<double> xs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) xs[i] = grid[i] * grid[i];
  return ladder_recurrence_check(params.alpha(), n, xs);
}

double energy_residual(const AlgebraParams& params, int n, const RadialGrid& grid) {
  const auto r = grid.points();
  const std::vector<double> psi = real_eigenfunction(params, n, r);
  const double scale = max_abs(psi);
  if (scale == 0.0 || grid.size() < 3) return 0.0;
  const double eigenvalue = n + params.lowest_weight();
  const double radial = params.dim() - 1.0;
  const double centrifugal = params.angular_eigenvalue();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (r[i] <= 0.0) continue;
    const Stencil s = differentiate(r, psi, i);
    const double j3 =
        0.25 * (-s.d2 - radial / r[i] * s.d1 + centrifugal / (r[i] * r[i]) * psi[i] + r[i] * r[i] * psi[i]);
    worst = std::max(worst, std::abs(j3 - eigenvalue * psi[i]));
  }
  return worst / scale;
}

RadialFunction coherent_wavefunction(const AlgebraParams& params, double k, const RadialGrid& grid) {
  require_positive_label(k);
  const double alpha = params.alpha();
  const double log_norm = 0.5 * (std::numbers::ln2 + log_gamma(1.0 + alpha));
  const double sqrt_k = std::sqrt(k);
  RadialFunction f{grid, std::vector<Complex>(grid.size()), params, std::nullopt, Complex(k, 0.0), 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    if (r == 0.0) {
      // I_alpha(z) ~ (z/2)^alpha / Gamma(alpha+1): the value tends to r^l sqrt(2/Gamma(1+alpha)) e^{-k}.
      f.values[i] = params.ell() == 0 ? std::exp(0.5 * (std::numbers::ln2 - log_gamma(1.0 + alpha)) - k) : 0.0;
      continue;
    }
    const double log_value = (1.0 - params.dim() / 2.0) * std::log(r) - 0.5 * r * r + log_norm - k +
                             log_bessel_i(alpha, 2.0 * r * sqrt_k) - 0.5 * alpha * std::log(k);
    f.values[i] = std::exp(log_value);
  }
  return f;
}

RadialFunction coherent_wavefunction_series(const CoherentState& state, const RadialGrid& grid) {
  return {grid, ladder_series(state, grid.points()), state.params(), std::nullopt, state.label(), 0.0};
}

RadialDensity density_evolution(const AlgebraParams& params, Complex k, double t, const RadialGrid& grid,
                                int n_max) {
  const EvolvedState evolved = evolve(coherent_coeffs(params, k, n_max), t);
  const std::vector<Complex> psi = ladder_series(evolved.state, grid.points());
  RadialDensity d{grid, std::vector<double>(grid.size()), params, k, t};
  for (std::size_t i = 0; i < grid.size(); ++i) d.values[i] = int_pow(grid[i], params.dim() - 1) * std::norm(psi[i]);
  return d;
}

double density_norm_drift(const AlgebraParams& params, Complex k, int frames, int n_max) {
  if (frames < 2) throw ValidationError("density drift needs at least two frames");
  const CoherentState state = coherent_coeffs(params, k, n_max);
  if (!state.converged()) throw ConvergenceError("coherent expansion has not converged; raise n_max");
  const QuadratureRule rule = composite_gauss_legendre(0.0, coherent_rmax(std::abs(k)));
  const RadialGrid grid = RadialGrid::from_rule(rule);
  const double period = std::numbers::pi / params.omega();
  double p0 = 0.0;
  double drift = 0.0;
  for (int f = 0; f < frames; ++f) {
    const double t = period * f / (frames - 1);
    const double p = rule.integrate(density_evolution(params, k, t, grid, n_max).values);
    if (f == 0) p0 = p;
    drift = std::max(drift, std::abs(p - p0) / p0);
  }
  return drift;
}

AsymptoticReport asymptotic_gaussian_check(const AlgebraParams& params, double k, double t, int n_max,
                                           double step) {
  require_positive_label(k);
  AsymptoticReport report;
  const double center = 2.0 * std::sqrt(k) * std::cos(params.omega() * t);
  report.expected_center = center;
  report.window_lo = std::max(center - 3.0, std::sqrt(k));
  report.window_hi = center + 3.0;
  if (!(report.window_hi > report.window_lo)) throw ValidationError("comparison window is empty for this k and t");

  const CoherentState state = coherent_coeffs(params, k, n_max);
  const double norm = norm_squared(state);
  const RadialGrid grid = RadialGrid::uniform(std::max(0.0, center - 3.0), center + 3.0, step);
  const RadialDensity density = density_evolution(params, k, t, grid, n_max);

  const auto r = grid.points();
  std::vector<double> normalized(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) normalized[i] = density.values[i] / norm;
  auto gaussian = [center](double x) { return std::exp(-(x - center) * (x - center)) / std::sqrt(std::numbers::pi); };

  std::size_t peak = static_cast<std::size_t>(std::max_element(normalized.begin(), normalized.end()) - normalized.begin());
  peak = std::clamp<std::size_t>(peak, 1, grid.size() - 2);
  const double y_lo = std::log(normalized[peak - 1]);
  const double y_mid = std::log(normalized[peak]);
  const double y_hi = std::log(normalized[peak + 1]);
  const double curvature = (y_hi - 2.0 * y_mid + y_lo) / (2.0 * step * step);
  const double slope = (y_hi - y_lo) / (2.0 * step);
  report.fitted_center = r[peak] - slope / (2.0 * curvature);
  report.fitted_width = curvature < 0.0 ? std::sqrt(-1.0 / curvature) : std::numeric_limits<double>::infinity();
  report.peak_deviation = std::abs(normalized[peak] / gaussian(r[peak]) - 1.0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (r[i] < report.window_lo || r[i] > report.window_hi) continue;
    report.window_deviation = std::max(report.window_deviation, std::abs(normalized[i] / gaussian(r[i]) - 1.0));
  }
  return report;
}

N1DensityReport n1_density(const AlgebraParams& params, double k, double t, std::span<const double> xs, int n_max) {
  const auto sector = params.parity();
  if (!sector) throw ValidationError("one-dimensional densities need N = 1");
  require_positive_label(k);

  const EvolvedState evolved = evolve(coherent_coeffs(params, k, n_max), t);
  const std::vector<Complex> psi = ladder_series(evolved.state, xs);
  // Half-line radial normalization -> full line, and the odd state's lambda = sqrt(2k).
  const double convention = 0.5 * n1_sector_weight(*sector, k);

  const double wt = params.omega() * t;
  const double shift = 2.0 * std::sqrt(k) * std::cos(wt);
  const double twist = 2.0 * std::sqrt(k) * std::sin(wt);
  const double sign = *sector == Parity::Even ? 1.0 : -1.0;
  const double prefactor = 0.25 / std::sqrt(std::numbers::pi) * std::exp(2.0 * k);

  N1DensityReport report;
  report.xs.assign(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    report.series.push_back(convention * std::norm(psi[i]));
    const Complex ahead = std::exp(-0.5 * (x - shift) * (x - shift)) * std::polar(1.0, -x * twist);
    const Complex behind = std::exp(-0.5 * (x + shift) * (x + shift)) * std::polar(1.0, x * twist);
    report.closed.push_back(prefactor * std::norm(ahead + sign * behind));
  }
  const double peak = max_abs(report.closed);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (report.closed[i] <= 1e-12 * peak) continue;
    report.max_rel_deviation =
        std::max(report.max_rel_deviation, std::abs(report.series[i] - report.closed[i]) / report.closed[i]);
  }
  return report;
}

double hermite_function(int n, double x) {
  const double log_scale = -0.5 * (n * std::numbers::ln2 + log_gamma(n + 1.0)) - 0.25 * std::log(std::numbers::pi);
  return std::exp(log_scale - 0.5 * x * x) * hermite(n, x);
}

}  // namespace osc
