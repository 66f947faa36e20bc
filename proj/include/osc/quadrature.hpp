#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace osc {

/// Nodes and weights of a quadrature rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// sum_i w_i f_i for samples taken at the nodes.
  double integrate(std::span<const double> samples) const;
};

/// Gauss-Legendre rule of the given order on [-1, 1] (Newton on P_order).
QuadratureRule gauss_legendre(int order);

inline constexpr int kDefaultPanels = 2000;
inline constexpr int kDefaultPanelOrder = 8;

/// Composite Gauss-Legendre rule on [lo, hi] with equal-width panels.
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels = kDefaultPanels,
                                        int order = kDefaultPanelOrder);

}  // namespace osc
