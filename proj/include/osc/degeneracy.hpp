#pragma once

// Level degeneracies of the isotropic oscillator counted in the Cartesian
// basis (D) and in the spherical basis (sum of angular multiplicities d over
// l of the same parity as the level). All counts are exact integers.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace osc {

using Count = boost::multiprecision::cpp_int;

/// D(n) = (N + n - 1)! / (n! (N - 1)!), the number of N-tuples of
/// nonnegative integers summing to n.
Count cartesian_degeneracy(int dim, int n_tilde);

/// d(l) = (2l + N - 2)(l + N - 3)! / (l! (N - 2)!) for N >= 2. The N = 2,
/// l = 0 case, where the formula is indeterminate, is 1.
Count spherical_multiplicity(int dim, int ell);

struct DegeneracyRow {
  int n_tilde = 0;
  Count cartesian;
  std::vector<std::pair<int, Count>> spherical_breakdown;  // (l, d(l)) with l = n_tilde, n_tilde - 2, ...
  Count spherical_total;

  bool ok() const { return cartesian == spherical_total; }
};

struct DegeneracyTable {
  int dim = 0;
  std::vector<DegeneracyRow> rows;

  bool ok() const;
};

/// Cartesian vs spherical counts for n_tilde = 0..n_tilde_max.
DegeneracyTable identity_check(int dim, int n_tilde_max);

/// D(n) + d(n + 2) == D(n + 2)
bool induction_step_holds(int dim, int n_tilde);

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// Counts N-tuples summing to n_tilde by direct enumeration. Throws
/// TooLargeError once more than `limit` tuples have been visited.
std::uint64_t brute_force_count(int dim, int n_tilde, std::uint64_t limit = kEnumerationLimit);

}  // namespace osc
