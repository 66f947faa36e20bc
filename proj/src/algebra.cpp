#include "osc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "osc/error.hpp"

namespace osc {

AlgebraParams::AlgebraParams(int dim, int ell, double omega)
    : dim_(dim),
      ell_(ell),
      omega_(omega),
      alpha_(ell + dim / 2.0 - 1.0),
      casimir_(0.25 * (alpha_ * alpha_ - 1.0)) {}

std::optional<Parity> AlgebraParams::parity() const {
  if (dim_ != 1) return std::nullopt;
  return ell_ == 0 ? Parity::Even : Parity::Odd;
}

AlgebraParams make_params(int dim, int ell, double omega) {
  if (dim < 1) throw ValidationError("dimension N must be at least 1, got " + std::to_string(dim));
  if (ell < 0) throw ValidationError("angular label l must be nonnegative, got " + std::to_string(ell));
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ValidationError("omega must be positive and finite");
  if (dim == 1 && ell > 1) {
    throw ValidationError("for N = 1 the label must be a parity tag (0 even, 1 odd), got " + std::to_string(ell));
  }
  return AlgebraParams(dim, ell, omega);
}

AlgebraParams make_params(Parity sector, double omega) { return make_params(1, static_cast<int>(sector), omega); }

// For integer n and half-integer alpha the product under the root is exact,
// so one rounding separates these from the true value.
double sigma_plus(double alpha, int n) { return std::sqrt((n + 1.0) * (n + alpha + 1.0)); }

double sigma_minus(double alpha, int n) {
  if (n == 0) return 0.0;
  return std::sqrt(n * (n + alpha));
}

TruncatedRep build_rep(const AlgebraParams& params, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  const std::size_t order = static_cast<std::size_t>(n_max) + 1;
  TruncatedRep rep{params, n_max, DenseMatrix(order), DenseMatrix(order), DenseMatrix(order)};
  const double m0 = params.lowest_weight();
  for (int n = 0; n <= n_max; ++n) {
    rep.j3.set(n, n, m0 + n);
    double hi = 0.0;
    double lo = 0.0;
    if (n < n_max) {
      split_sqrt((n + 1.0) * (n + params.alpha() + 1.0), hi, lo);
      rep.k_plus.set(n + 1, n, hi, lo);
    }
    if (n > 0) {
      split_sqrt(n * (n + params.alpha()), hi, lo);
      rep.k_minus.set(n - 1, n, hi, lo);
    }
  }
  return rep;
}

double CommutatorResiduals::max() const { return std::max({j3_kplus, j3_kminus, kplus_kminus}); }

CommutatorResiduals commutator_residuals(const TruncatedRep& rep, Region region) {
  const std::size_t block = region == Region::Interior ? rep.order() - 1 : rep.order();
  CommutatorResiduals r;
  r.j3_kplus = (commutator(rep.j3, rep.k_plus) - rep.k_plus).max_abs(block);
  r.j3_kminus = (commutator(rep.j3, rep.k_minus) + rep.k_minus).max_abs(block);
  r.kplus_kminus = (commutator(rep.k_plus, rep.k_minus) + 2.0 * rep.j3).max_abs(block);
  return r;
}

double casimir_residual(const TruncatedRep& rep) {
  const DenseMatrix lhs = rep.j3 * rep.j3 - rep.j3 - rep.k_plus * rep.k_minus;
  return (lhs - rep.params.casimir() * DenseMatrix::identity(rep.order())).max_abs();
}

double lowest_weight_defect(const AlgebraParams& params) {
  const double m0 = params.lowest_weight();
  const double shifted = params.ell() + params.dim() / 2.0 - 1.0;
  return std::abs((m0 - 0.5) * (m0 - 0.5) - 0.25 * shifted * shifted);
}

std::string_view branch_status_name(BranchStatus status) {
  switch (status) {
    case BranchStatus::Excluded:
      return "Excluded";
    case BranchStatus::TrivialRep:
      return "TrivialRep";
    case BranchStatus::DuplicateOfA:
      return "DuplicateOfA";
    case BranchStatus::PhysicalOddParity:
      return "PhysicalOddParity";
  }
  return "Unknown";
}

BranchReport spectrum(const AlgebraParams& params, int n_count) {
  if (n_count < 1) throw ValidationError("n_count must be at least 1");
  const int dim = params.dim();
  // The second branch is the other root m0 = 1 - l/2 - N/4. For N = 1 the
  // physical angular label is 0; the parity tag only selects branch a.
  const int ell = params.one_dimensional() ? 0 : params.ell();

  BranchReport report{params, {}, {}, BranchStatus::Excluded, {}};
  for (int n = 0; n < n_count; ++n) {
    report.branch_a_energies.push_back(params.energy(n));
    report.branch_b_energies.push_back(params.omega() * (2.0 * n + 2.0 - ell - dim / 2.0));
  }

  const double ground_b = 2.0 - ell - dim / 2.0;
  if (dim == 1) {
    report.branch_b_status = BranchStatus::PhysicalOddParity;
    report.reason = "N = 1: second branch omega(2n + 3/2) is the odd-parity spectrum";
  } else if (dim == 2 && ell == 0) {
    report.branch_b_status = BranchStatus::DuplicateOfA;
    report.reason = "N = 2, l = 0: second branch omega(2n + 1) coincides with the first";
  } else if ((dim == 2 && ell == 1) || (dim == 4 && ell == 0)) {
    report.branch_b_status = BranchStatus::TrivialRep;
    report.reason = "zero ground energy: trivial realization of O(2,1), reported but not a state";
  } else if (dim == 3 && ell == 0) {
    report.branch_b_status = BranchStatus::Excluded;
    report.reason = "N = 3, l = 0: ground energy omega/2 is excluded by the Cartesian solution";
  } else {
    report.branch_b_status = BranchStatus::Excluded;
    report.reason = "second branch ground energy omega(" + std::to_string(ground_b) + ") is not positive";
  }
  return report;
}

}  // namespace osc
