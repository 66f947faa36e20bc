#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace osc {

/// Square row-major matrix whose entries are unevaluated sums hi + lo
/// (double-double). Products and sums are error-free up to about 1e-32
/// relative, so identities between irrational entries such as
/// sqrt(p) * sqrt(p) = p hold far below double rounding. Sized for truncated
/// ladder representations (a few hundred rows at most).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : order_(order), hi_(order * order, 0.0), lo_(order * order, 0.0) {}

  static DenseMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  /// Leading part of an entry.
  double operator()(std::size_t row, std::size_t col) const { return hi_[row * order_ + col]; }
  double lo(std::size_t row, std::size_t col) const { return lo_[row * order_ + col]; }
  /// hi + lo rounded to double.
  double value(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, double hi, double lo = 0.0);

  std::span<const double> hi_data() const { return hi_; }
  std::span<const double> lo_data() const { return lo_; }

  DenseMatrix transpose() const;
  std::vector<double> apply(std::span<const double> v) const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double scale);

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

  /// max |a_ij| over the leading `block` x `block` submatrix.
  double max_abs(std::size_t block) const;
  double max_abs() const { return max_abs(order_); }

 private:
  std::size_t order_ = 0;
  std::vector<double> hi_;
  std::vector<double> lo_;
};

/// [a, b] = ab - ba
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);

/// Splits sqrt(p) into hi + lo with hi = fl(sqrt(p)). Exact to about 1e-32
/// relative when p itself is exact.
void split_sqrt(double p, double& hi, double& lo);

}  // namespace osc
