#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "osc/algebra.hpp"
#include "osc/cli.hpp"
#include "osc/degeneracy.hpp"
#include "osc/error.hpp"
#include "osc/quadrature.hpp"

namespace osc::cli {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kEigenTol = 1e-12;
constexpr double kNormTol = 1e-10;
constexpr double kSectorNormTol = 1e-12;
constexpr double kOrthoTol = 1e-8;
constexpr double kSeriesTol = 1e-9;
constexpr double kOdeTol = 1e-5;
constexpr double kPhaseTol = 1e-12;
constexpr double kDriftTol = 1e-9;
constexpr double kRecombineTol = 1e-12;
constexpr int kOrthoLevels = 8;
constexpr int kDriftFrames = 8;

void add(VerifyReport& report, std::string name, double value, double tolerance) {
  report.checks.push_back({std::move(name), value, tolerance, value <= tolerance});
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Branch-a energies against (4n + 2l + N) / 2 in units of omega; both sides
// are exact dyadic rationals for the supported ranges.
double spectrum_defect(const AlgebraParams& params, int count) {
  const BranchReport report = spectrum(params, count);
  double defect = 0.0;
  for (int n = 0; n < count; ++n) {
    const double exact = (4.0 * n + 2.0 * params.ell() + params.dim()) / 2.0;
    defect = std::max(defect, std::abs(report.branch_a_energies[n] / params.omega() - exact));
  }
  return defect;
}

// Pointwise relative deviation over [0, 12], skipping points below 1e-12 of the peak.
double series_vs_closed(const AlgebraParams& params, const CoherentState& state, double k) {
  const RadialGrid grid = RadialGrid::uniform(0.0, 12.0, 0.01);
  const RadialFunction series = coherent_wavefunction_series(state, grid);
  const RadialFunction closed = coherent_wavefunction(params, k, grid);
  double scale = 0.0;
  for (const Complex& v : closed.values) scale = std::max(scale, std::abs(v));
  double defect = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ref = std::abs(closed.values[i]);
    if (ref <= 1e-12 * scale) continue;
    defect = std::max(defect, std::abs(series.values[i] - closed.values[i]) / ref);
  }
  return defect;
}

}  // namespace

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyReport verify(const AlgebraParams& params, int n_max, Complex k) {
  VerifyReport report{params, n_max, k, {}};

  add(report, "spectrum.branch_a_exact", spectrum_defect(params, n_max + 1), 0.0);
  add(report, "algebra.lowest_weight", lowest_weight_defect(params), 0.0);

  const TruncatedRep rep = build_rep(params, n_max);
  const CommutatorResiduals comm = commutator_residuals(rep, Region::Interior);
  add(report, "algebra.commutator_j3_kplus", comm.j3_kplus, kAlgebraTol);
  add(report, "algebra.commutator_j3_kminus", comm.j3_kminus, kAlgebraTol);
  add(report, "algebra.commutator_kplus_kminus", comm.kplus_kminus, kAlgebraTol);
  add(report, "algebra.casimir", casimir_residual(rep), kAlgebraTol);

  const CoherentState state = coherent_coeffs(params, k, n_max);
  if (!state.converged()) {
    throw ConvergenceError("coherent expansion for |k| = " + std::to_string(std::abs(k)) +
                           " has not converged at n_max = " + std::to_string(n_max));
  }
  add(report, "coherent.tail_ratio", state.tail_ratio(), kTailBound);
  add(report, "coherent.eigen_residual", eigen_residual(state, rep), kEigenTol);
  add(report, "coherent.norm_identity", rel(norm_squared(state), norm_closed_form(params, std::abs(k))), kNormTol);
  add(report, "coherent.evolution_phase", evolution_phase_defect(state, 0.7 / params.omega()), kPhaseTol);

  if (const auto sector = params.parity()) {
    const double abs_k = std::abs(k);
    const double scaled = norm_squared(state) * n1_sector_weight(*sector, abs_k);
    add(report, "coherent.n1_sector_norm", rel(scaled, n1_sector_norm(*sector, abs_k)), kSectorNormTol);
    // The recombination pairs both sectors at the same label k = c^2 / 2.
    const Complex c = std::sqrt(2.0 * k);
    const CoherentState even = coherent_coeffs(make_params(Parity::Even, params.omega()), k, n_max);
    const CoherentState odd = coherent_coeffs(make_params(Parity::Odd, params.omega()), k, n_max);
    add(report, "coherent.n1_recombination", recombine_n1(even, odd, c).max_deviation(), kRecombineTol);
  }

  const QuadratureRule rule = composite_gauss_legendre(0.0, quadrature_rmax(params, kOrthoLevels));
  add(report, "wavefunctions.orthonormality", orthonormality_defect(params, kOrthoLevels, rule), kOrthoTol);
  const RadialGrid ode_grid = RadialGrid::uniform(0.1, 4.0, kDefaultGridStep);
  add(report, "wavefunctions.ground_state_ode", ground_state_ode_residual(params, ode_grid), kOdeTol);
  if (k.imag() == 0.0 && k.real() > 0.0) {
    add(report, "wavefunctions.series_vs_closed_form", series_vs_closed(params, state, k.real()), kSeriesTol);
  }
  add(report, "wavefunctions.density_norm_drift", density_norm_drift(params, k, kDriftFrames, n_max), kDriftTol);

  if (params.dim() >= 2) {
    const DegeneracyTable table = identity_check(params.dim(), kDefaultDegeneracyMax);
    double failures = 0.0;
    for (const DegeneracyRow& row : table.rows) {
      if (!row.ok() || !induction_step_holds(params.dim(), row.n_tilde)) failures += 1.0;
    }
    add(report, "degeneracy.identity_failures", failures, 0.0);
  }
  return report;
}

}  // namespace osc::cli
