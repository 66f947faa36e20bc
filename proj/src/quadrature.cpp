#include "osc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "osc/error.hpp"

namespace osc {

double QuadratureRule::integrate(std::span<const double> samples) const {
  if (samples.size() != nodes.size()) throw ValidationError("sample count does not match quadrature nodes");
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += weights[i] * samples[i];
  return sum;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw ValidationError("Gauss-Legendre order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int order) {
  if (!(hi > lo)) throw ValidationError("quadrature interval must have hi > lo");
  if (panels < 1) throw ValidationError("panel count must be positive");
  const QuadratureRule base = gauss_legendre(order);
  const double width = (hi - lo) / panels;
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    for (int j = 0; j < order; ++j) {
      rule.nodes.push_back(mid + 0.5 * width * base.nodes[j]);
      rule.weights.push_back(0.5 * width * base.weights[j]);
    }
  }
  return rule;
}

}  // namespace osc
