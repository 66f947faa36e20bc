#pragma once

// Error-free transformations on unevaluated sums hi + lo. Plain inline
// functions so the scalar kernels and the AVX2 lanes can mirror them exactly.
// Internal linkage keeps the copy built with -mavx2 out of other objects.

#include <cmath>

namespace osc::dd {
namespace {

struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Pair quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Pair two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// (ah + al) (bh + bl), dropping al * bl.
inline Pair mul(double ah, double al, double bh, double bl) {
  const Pair p = two_prod(ah, bh);
  return quick_two_sum(p.hi, p.lo + (ah * bl + al * bh));
}

inline Pair add(double ah, double al, double bh, double bl) {
  const Pair s = two_sum(ah, bh);
  return quick_two_sum(s.hi, s.lo + (al + bl));
}

}  // namespace
}  // namespace osc::dd
