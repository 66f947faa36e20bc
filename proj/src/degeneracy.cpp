#include "osc/degeneracy.hpp"

#include <algorithm>
#include <string>

#include "osc/error.hpp"

namespace osc {

namespace {

// C(n, k) by the multiplicative formula; every partial product is an exact binomial.
Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count factorial(int n) {
  Count result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw ValidationError(std::string(name) + " must be nonnegative");
}

// Tuples (n_1..n_slots) of nonnegative integers with the given sum.
void enumerate(int slots, int remaining, std::uint64_t& count, std::uint64_t limit) {
  if (slots == 1) {
    if (++count > limit) throw TooLargeError("enumeration exceeds " + std::to_string(limit) + " tuples");
    return;
  }
  for (int first = 0; first <= remaining; ++first) enumerate(slots - 1, remaining - first, count, limit);
}

}  // namespace

Count cartesian_degeneracy(int dim, int n_tilde) {
  if (dim < 1) throw ValidationError("dimension N must be at least 1");
  require_nonnegative(n_tilde, "n_tilde");
  return binomial(dim + n_tilde - 1, n_tilde);
}

Count spherical_multiplicity(int dim, int ell) {
  if (dim < 2) throw ValidationError("angular multiplicity needs N >= 2; N = 1 has one state per parity sector");
  require_nonnegative(ell, "l");
  if (dim == 2) return ell == 0 ? 1 : 2;
  const Count numerator = Count(2 * ell + dim - 2) * factorial(ell + dim - 3);
  const Count denominator = factorial(ell) * factorial(dim - 2);
  if (numerator % denominator != 0) {
    throw std::logic_error("angular multiplicity is not an integer for N = " + std::to_string(dim));
  }
  return numerator / denominator;
}

bool DegeneracyTable::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const DegeneracyRow& row) { return row.ok(); });
}

DegeneracyTable identity_check(int dim, int n_tilde_max) {
  if (dim < 2) throw ValidationError("the spherical decomposition needs N >= 2");
  require_nonnegative(n_tilde_max, "n_tilde_max");
  DegeneracyTable table{dim, {}};
  for (int n = 0; n <= n_tilde_max; ++n) {
    DegeneracyRow row;
    row.n_tilde = n;
    row.cartesian = cartesian_degeneracy(dim, n);
    row.spherical_total = 0;
    for (int ell = n % 2; ell <= n; ell += 2) {
      Count d = spherical_multiplicity(dim, ell);
      row.spherical_total += d;
      row.spherical_breakdown.emplace_back(ell, std::move(d));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool induction_step_holds(int dim, int n_tilde) {
  return cartesian_degeneracy(dim, n_tilde) + spherical_multiplicity(dim, n_tilde + 2) ==
         cartesian_degeneracy(dim, n_tilde + 2);
}

std::uint64_t brute_force_count(int dim, int n_tilde, std::uint64_t limit) {
  if (dim < 1) throw ValidationError("dimension N must be at least 1");
  require_nonnegative(n_tilde, "n_tilde");
  std::uint64_t count = 0;
  enumerate(dim, n_tilde, count, limit);
  return count;
}

}  // namespace osc
