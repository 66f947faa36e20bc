#include "osc/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "osc/error.hpp"
#include "osc/simd/kernels.hpp"
#include "simd/double_double.hpp"

namespace osc {

namespace {

void require_same_order(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.order() != b.order()) throw ValidationError("matrix orders differ");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t order) {
  DenseMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
  return m;
}

double DenseMatrix::value(std::size_t row, std::size_t col) const {
  const std::size_t at = row * order_ + col;
  return hi_[at] + lo_[at];
}

void DenseMatrix::set(std::size_t row, std::size_t col, double hi, double lo) {
  const dd::Pair p = dd::quick_two_sum(hi, lo);
  hi_[row * order_ + col] = p.hi;
  lo_[row * order_ + col] = p.lo;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) {
      t.hi_[j * order_ + i] = hi_[i * order_ + j];
      t.lo_[j * order_ + i] = lo_[i * order_ + j];
    }
  return t;
}

std::vector<double> DenseMatrix::apply(std::span<const double> v) const {
  if (v.size() != order_) throw ValidationError("vector length does not match matrix order");
  std::vector<double> out(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < order_; ++j) sum += value(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < hi_.size(); ++i) {
    const dd::Pair s = dd::add(hi_[i], lo_[i], other.hi_[i], other.lo_[i]);
    hi_[i] = s.hi;
    lo_[i] = s.lo;
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < hi_.size(); ++i) {
    const dd::Pair s = dd::add(hi_[i], lo_[i], -other.hi_[i], -other.lo_[i]);
    hi_[i] = s.hi;
    lo_[i] = s.lo;
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double scale) {
  for (std::size_t i = 0; i < hi_.size(); ++i) {
    const dd::Pair p = dd::mul(hi_[i], lo_[i], scale, 0.0);
    hi_[i] = p.hi;
    lo_[i] = p.lo;
  }
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_order(a, b);
  DenseMatrix c(a.order());
  simd::matmul_dd({a.hi_, a.lo_}, {b.hi_, b.lo_}, c.hi_, c.lo_, a.order());
  return c;
}

double DenseMatrix::max_abs(std::size_t block) const {
  block = std::min(block, order_);
  double m = 0.0;
  for (std::size_t i = 0; i < block; ++i)
    for (std::size_t j = 0; j < block; ++j) m = std::max(m, std::abs(value(i, j)));
  return m;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

void split_sqrt(double p, double& hi, double& lo) {
  hi = std::sqrt(p);
  lo = hi == 0.0 ? 0.0 : std::fma(-hi, hi, p) / (2.0 * hi);
}

}  // namespace osc
