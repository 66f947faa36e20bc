#pragma once

// O(2,1) ladder algebra of the N-dimensional isotropic oscillator in the
// |n, l> energy basis: parameters, truncated matrix representations of
// J3, K+ and K-, and the two candidate energy branches.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osc/dense_matrix.hpp"

namespace osc {

inline constexpr int kDefaultNMax = 128;

/// Parity sector of the one-dimensional oscillator. For N = 1 the angular
/// label slot carries the sector: l = 0 is even (alpha = -1/2), l = 1 is odd
/// (alpha = +1/2).
enum class Parity { Even = 0, Odd = 1 };

/// Oscillator parameters with the derived representation label alpha and
/// Casimir value. Construct through make_params.
class AlgebraParams {
 public:
  int dim() const { return dim_; }
  int ell() const { return ell_; }
  double omega() const { return omega_; }
  /// alpha = l + N/2 - 1
  double alpha() const { return alpha_; }
  /// C = (alpha^2 - 1) / 4
  double casimir() const { return casimir_; }
  /// Lowest J3 eigenvalue m0 = l/2 + N/4.
  double lowest_weight() const { return ell_ / 2.0 + dim_ / 4.0; }
  /// l (l + N - 2), the eigenvalue of the squared angular momentum.
  double angular_eigenvalue() const { return static_cast<double>(ell_) * (ell_ + dim_ - 2); }

  bool one_dimensional() const { return dim_ == 1; }
  std::optional<Parity> parity() const;

  /// E_n = omega (2n + l + N/2), i.e. 2 omega (m0 + n).
  double energy(int n) const { return omega_ * (2.0 * n + ell_ + dim_ / 2.0); }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  friend AlgebraParams make_params(int dim, int ell, double omega);
  AlgebraParams(int dim, int ell, double omega);

  int dim_ = 1;
  int ell_ = 0;
  double omega_ = 1.0;
  double alpha_ = -0.5;
  double casimir_ = -0.1875;
};

/// Validates and derives parameters. For N = 1, ell must be a parity tag (0 or 1).
AlgebraParams make_params(int dim, int ell, double omega = 1.0);
AlgebraParams make_params(Parity sector, double omega = 1.0);

/// sigma_n^+ = sqrt((n+1)(n+alpha+1)), the K+ matrix element <n+1|K+|n>.
double sigma_plus(double alpha, int n);
/// sigma_n^- = sqrt(n(n+alpha)), the K- matrix element <n-1|K-|n>.
double sigma_minus(double alpha, int n);

/// Dense truncated representation on the states n = 0..n_max. The ladder
/// entries are stored as double-double, so the algebra holds to ~1e-28.
struct TruncatedRep {
  AlgebraParams params;
  int n_max = 0;
  DenseMatrix j3;
  DenseMatrix k_plus;
  DenseMatrix k_minus;

  std::size_t order() const { return static_cast<std::size_t>(n_max) + 1; }
};

TruncatedRep build_rep(const AlgebraParams& params, int n_max = kDefaultNMax);

/// Which part of a truncated matrix a residual is measured on.
enum class Region {
  Interior,  // drop the last row and column, where ladder identities need n_max + 1
  Full,
};

struct CommutatorResiduals {
  double j3_kplus = 0.0;      // max |[J3, K+] - K+|
  double j3_kminus = 0.0;     // max |[J3, K-] + K-|
  double kplus_kminus = 0.0;  // max |[K+, K-] + 2 J3|

  double max() const;
};

CommutatorResiduals commutator_residuals(const TruncatedRep& rep, Region region = Region::Interior);

/// max |J3^2 - J3 - K+ K- - C I| over the full matrix.
double casimir_residual(const TruncatedRep& rep);

/// |(m0 - 1/2)^2 - (l + N/2 - 1)^2 / 4|, zero when m0 solves the lowest-weight quadratic.
double lowest_weight_defect(const AlgebraParams& params);

enum class BranchStatus { Excluded, TrivialRep, DuplicateOfA, PhysicalOddParity };

std::string_view branch_status_name(BranchStatus status);

struct BranchReport {
  AlgebraParams params;
  std::vector<double> branch_a_energies;  // omega (2n + l + N/2)
  std::vector<double> branch_b_energies;  // omega (2n + 2 - l - N/2)
  BranchStatus branch_b_status = BranchStatus::Excluded;
  std::string reason;
};

/// Lists both energy branches for n = 0..n_count-1 and classifies the second.
/// For N = 1 the second branch is evaluated at l = 0 and is the odd-parity series.
BranchReport spectrum(const AlgebraParams& params, int n_count);

}  // namespace osc
