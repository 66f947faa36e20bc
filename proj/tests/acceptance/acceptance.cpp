// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include "osc/algebra.hpp"
#include "osc/coherent.hpp"
#include "osc/degeneracy.hpp"
#include "osc/quadrature.hpp"
#include "osc/wavefunctions.hpp"

namespace {

using namespace osc;
using boost::multiprecision::cpp_rational;

// Tolerances, fixed by the criteria.
constexpr double kAlgebraTol = 1e-12;
constexpr double kEigenTol = 1e-12;
constexpr double kNormTol = 1e-10;
constexpr double kSectorTol = 1e-12;
constexpr double kOrthoTol = 1e-8;
constexpr double kSeriesTol = 1e-9;
constexpr double kOdeTol = 1e-5;
constexpr double kCenterTol = 0.05;
constexpr double kGaussTol = 0.03;
constexpr double kRecombineTol = 1e-12;
constexpr double kPhaseTol = 1e-12;
constexpr double kDriftTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every (N, l) the algebra criterion covers; N = 1 only carries parity tags.
std::vector<std::pair<int, int>> algebra_sweep() {
  std::vector<std::pair<int, int>> out;
  for (int dim = 1; dim <= 6; ++dim)
    for (int ell = 0; ell <= (dim == 1 ? 1 : 6); ++ell) out.emplace_back(dim, ell);
  return out;
}

// A parameter set realizing each alpha of the coherent sweep.
AlgebraParams params_for_alpha(double alpha) {
  if (alpha == -0.5) return make_params(1, 0);
  if (alpha == 0.0) return make_params(2, 0);
  if (alpha == 0.5) return make_params(1, 1);
  if (alpha == 1.0) return make_params(4, 0);
  if (alpha == 2.0) return make_params(2, 2);
  return make_params(3, 3);  // 7/2
}

const double kSweepAlpha[] = {-0.5, 0.0, 0.5, 1.0, 2.0, 3.5};
const double kSweepAbsK[] = {0.1, 0.5, 1.0, 2.0, 4.0};
const double kSweepPhase[] = {0.0, std::numbers::pi / 3.0, 0.9 * std::numbers::pi, 1.6 * std::numbers::pi};

// ---------------------------------------------------------------------------

Outcome algebra_suite() {
  double worst_comm = 0.0;
  double worst_casimir = 0.0;
  for (const auto& [dim, ell] : algebra_sweep()) {
    const TruncatedRep rep = build_rep(make_params(dim, ell), 64);
    worst_comm = std::max(worst_comm, commutator_residuals(rep, Region::Interior).max());
    // Casimir value from the criterion, independent of the stored one.
    const double shifted = ell + dim / 2.0 - 1.0;
    const double c = 0.25 * (shifted * shifted - 1.0);
    const DenseMatrix lhs = rep.j3 * rep.j3 - rep.j3 - rep.k_plus * rep.k_minus;
    worst_casimir = std::max(worst_casimir, (lhs - c * DenseMatrix::identity(rep.order())).max_abs());
  }
  return {worst_comm <= kAlgebraTol && worst_casimir <= kAlgebraTol,
          fmt::format("max commutator {:.3g}, max Casimir {:.3g} (tol {:g})", worst_comm, worst_casimir, kAlgebraTol)};
}

Outcome spectrum_suite() {
  int mismatches = 0;
  int checked = 0;
  for (const auto& [dim, ell] : algebra_sweep()) {
    for (double omega : {1.0, 0.5, 2.0}) {
      const AlgebraParams p = make_params(dim, ell, omega);
      const BranchReport report = spectrum(p, 64);
      for (int n = 0; n < 64; ++n) {
        const cpp_rational exact = cpp_rational(omega) * cpp_rational(4 * n + 2 * ell + dim, 2);
        mismatches += cpp_rational(report.branch_a_energies[n]) != exact;
        ++checked;
      }
    }
  }

  // Expected second-branch classification.
  auto expected = [](int dim, int ell) {
    if (dim == 1) return BranchStatus::PhysicalOddParity;
    if (dim == 2 && ell == 0) return BranchStatus::DuplicateOfA;
    if ((dim == 2 && ell == 1) || (dim == 4 && ell == 0)) return BranchStatus::TrivialRep;
    return BranchStatus::Excluded;
  };
  int wrong_status = 0;
  for (const auto& [dim, ell] : algebra_sweep()) {
    const BranchReport r = spectrum(make_params(dim, ell), 4);
    wrong_status += r.branch_b_status != expected(dim, ell);
  }
  const BranchReport four = spectrum(make_params(4, 0), 2);
  const BranchReport one = spectrum(make_params(1, 1), 3);
  const BranchReport duplicate = spectrum(make_params(2, 0), 5);
  const bool anchors = four.branch_b_energies[0] == 0.0 && one.branch_b_energies[0] == 1.5 &&
                       one.branch_b_energies[2] == 5.5 && duplicate.branch_b_energies == duplicate.branch_a_energies;
  return {mismatches == 0 && wrong_status == 0 && anchors,
          fmt::format("{} exact energy mismatches of {}, {} misclassified branches, anchors {}", mismatches, checked,
                      wrong_status, anchors ? "ok" : "wrong")};
}

Outcome coherent_eigen_suite() {
  double worst = 0.0;
  for (double alpha : kSweepAlpha) {
    const AlgebraParams p = params_for_alpha(alpha);
    const TruncatedRep rep = build_rep(p, 128);
    for (double abs_k : kSweepAbsK)
      for (double phase : kSweepPhase) {
        worst = std::max(worst, eigen_residual(coherent_coeffs(p, std::polar(abs_k, phase), 128), rep));
      }
  }
  return {worst <= kEigenTol, fmt::format("max ||K-v - kv||/||v|| {:.3g} (tol {:g})", worst, kEigenTol)};
}

Outcome norm_suite() {
  double worst = 0.0;
  for (double alpha : kSweepAlpha) {
    const AlgebraParams p = params_for_alpha(alpha);
    for (double abs_k : kSweepAbsK)
      for (double phase : kSweepPhase) {
        const double series = norm_squared(coherent_coeffs(p, std::polar(abs_k, phase), 128));
        const double closed = norm_closed_form(p, abs_k);
        worst = std::max(worst, std::abs(series - closed) / closed);
      }
  }
  double worst_sector = 0.0;
  for (double abs_k : kSweepAbsK) {
    const double even = norm_squared(coherent_coeffs(make_params(Parity::Even), abs_k, 128));
    const double odd = norm_squared(coherent_coeffs(make_params(Parity::Odd), abs_k, 128)) * 2.0 * abs_k;
    worst_sector = std::max(worst_sector, std::abs(even - std::cosh(2.0 * abs_k)) / std::cosh(2.0 * abs_k));
    worst_sector = std::max(worst_sector, std::abs(odd - std::sinh(2.0 * abs_k)) / std::sinh(2.0 * abs_k));
  }
  return {worst <= kNormTol && worst_sector <= kSectorTol,
          fmt::format("series vs Bessel {:.3g} (tol {:g}), N=1 cosh/sinh {:.3g} (tol {:g})", worst, kNormTol,
                      worst_sector, kSectorTol)};
}

Outcome wavefunction_suite() {
  double ortho = 0.0;
  for (int dim = 1; dim <= 5; ++dim)
    for (int ell = 0; ell <= (dim == 1 ? 1 : 4); ++ell) {
      const AlgebraParams p = make_params(dim, ell);
      ortho = std::max(ortho, orthonormality_defect(p, 8, composite_gauss_legendre(0.0, quadrature_rmax(p, 8))));
    }

  double series = 0.0;
  const RadialGrid grid = RadialGrid::uniform(0.0, 12.0, 0.01);
  for (double alpha : kSweepAlpha)
    for (double k : {0.5, 2.0, 8.0}) {
      const AlgebraParams p = params_for_alpha(alpha);
      const RadialFunction a = coherent_wavefunction_series(coherent_coeffs(p, k, 128), grid);
      const RadialFunction b = coherent_wavefunction(p, k, grid);
      double peak = 0.0;
      for (const Complex& v : b.values) peak = std::max(peak, std::abs(v));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ref = std::abs(b.values[i]);
        if (ref > 1e-12 * peak) series = std::max(series, std::abs(a.values[i] - b.values[i]) / ref);
      }
    }

  double ode = 0.0;
  const RadialGrid ode_grid = RadialGrid::uniform(0.1, 4.0, 1e-3);
  for (int dim = 1; dim <= 6; ++dim)
    for (int ell = 0; ell <= (dim == 1 ? 1 : 4); ++ell) {
      ode = std::max(ode, ground_state_ode_residual(make_params(dim, ell), ode_grid));
    }

  return {ortho <= kOrthoTol && series <= kSeriesTol && ode <= kOdeTol,
          fmt::format("orthonormality {:.3g} (tol {:g}), series vs closed {:.3g} (tol {:g}), ground ODE {:.3g} (tol {:g})",
                      ortho, kOrthoTol, series, kSeriesTol, ode, kOdeTol)};
}

Outcome asymptotic_suite() {
  struct Case {
    int dim;
    int ell;
    double t;
  };
  const Case cases[] = {{3, 0, 0.0}, {3, 2, 0.0}, {5, 2, 0.0}, {3, 0, std::numbers::pi / 3.0}, {3, 2, std::numbers::pi / 3.0}};
  double worst_center = 0.0;
  double worst_dev = 0.0;
  std::vector<double> centers_t0;
  for (const Case& c : cases) {
    const AsymptoticReport r = asymptotic_gaussian_check(make_params(c.dim, c.ell), 100.0, c.t);
    worst_center = std::max(worst_center, std::abs(r.fitted_center - r.expected_center));
    worst_dev = std::max(worst_dev, r.window_deviation);
    if (c.dim == 3 && c.t == 0.0) centers_t0.push_back(r.fitted_center);
  }
  // l-independence: the l = 0 and l = 2 peaks sit at the same place.
  const double spread = std::abs(centers_t0[0] - centers_t0[1]);
  return {worst_center <= kCenterTol && worst_dev <= kGaussTol && spread <= kCenterTol,
          fmt::format("center offset {:.3g} (tol {:g}), window deviation {:.3g} (tol {:g}), l=0 vs l=2 spread {:.3g}",
                      worst_center, kCenterTol, worst_dev, kGaussTol, spread)};
}

Outcome recombination_suite() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex c = std::polar(2.0 * std::sqrt(radius(rng)), angle(rng));
    const Complex k = 0.5 * c * c;
    const CoherentState even = coherent_coeffs(make_params(Parity::Even), k, 64);
    const CoherentState odd = coherent_coeffs(make_params(Parity::Odd), k, 64);
    worst = std::max(worst, recombine_n1(even, odd, c).max_deviation());
  }
  return {worst <= kRecombineTol, fmt::format("max Fock deviation {:.3g} over 10 labels (tol {:g})", worst, kRecombineTol)};
}

Outcome degeneracy_suite() {
  int failures = 0;
  for (int dim = 2; dim <= 8; ++dim) {
    const DegeneracyTable table = identity_check(dim, 14);
    for (const DegeneracyRow& row : table.rows) {
      failures += !row.ok();
      failures += !induction_step_holds(dim, row.n_tilde);
      failures += row.cartesian != brute_force_count(dim, row.n_tilde);
      // d(l) as a difference of enumerated counts (harmonic polynomials of degree l).
      for (const auto& [ell, d] : row.spherical_breakdown) {
        const Count lower = ell >= 2 ? Count(brute_force_count(dim, ell - 2)) : Count(0);
        failures += d != Count(brute_force_count(dim, ell)) - lower;
      }
    }
  }
  return {failures == 0, fmt::format("{} failed exact comparisons for N in [2, 8], n_tilde <= 14", failures)};
}

Outcome evolution_suite() {
  double phase = 0.0;
  for (double alpha : kSweepAlpha)
    for (double abs_k : kSweepAbsK)
      for (double t : {0.0, 0.3, std::numbers::pi / 2.0, 1.7, std::numbers::pi}) {
        const CoherentState s = coherent_coeffs(params_for_alpha(alpha), std::polar(abs_k, 0.4), 128);
        phase = std::max(phase, evolution_phase_defect(s, t));
      }
  double drift = 0.0;
  for (double alpha : kSweepAlpha)
    for (Complex k : {Complex(0.5, 0.0), Complex(2.0, 1.0), Complex(8.0, 0.0)}) {
      drift = std::max(drift, density_norm_drift(params_for_alpha(alpha), k, 8));
    }
  return {phase <= kPhaseTol && drift <= kDriftTol,
          fmt::format("per-level vs label map {:.3g} (tol {:g}), density norm drift {:.3g} (tol {:g})", phase,
                      kPhaseTol, drift, kDriftTol)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 algebra", algebra_suite},
      {"2 spectrum", spectrum_suite},
      {"3 coherent eigenrelation", coherent_eigen_suite},
      {"4 norm identity", norm_suite},
      {"5 wave functions", wavefunction_suite},
      {"6 asymptotic gaussian", asymptotic_suite},
      {"7 N=1 recombination", recombination_suite},
      {"8 degeneracy", degeneracy_suite},
      {"9 time evolution", evolution_suite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
