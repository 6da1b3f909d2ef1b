#pragma once

// Composite Gauss-Legendre rules with optional geometric grading toward the
// endpoints, for integrands such as (sin phi)^{2 nu} with nu = 1/4.

#include <cmath>
#include <numbers>
#include <type_traits>
#include <vector>

#include "circle_sqm/compensated.hpp"
#include "circle_sqm/errors.hpp"

namespace circle_sqm::numerics {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_order.
inline QuadratureRule gauss_legendre_reference(int order) {
  if (order < 2) {
    throw DomainError("gauss_legendre: order must be >= 2");
  }
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
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
      if (std::abs(dx) <= 1e-16 * std::abs(x)) {
        break;
      }
    }
    // refresh the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

/// Which endpoints get geometrically shrinking panels, how many, and the
/// size ratio between neighbouring panels.
struct EndpointRefinement {
  bool lower = false;
  bool upper = false;
  int levels = 40;
  double ratio = 0.25;

  static EndpointRefinement none() { return {}; }
  static EndpointRefinement both() { return {true, true}; }
};

inline QuadratureRule gauss_legendre(int panel_count, int order, double a, double b,
                                     EndpointRefinement refinement = EndpointRefinement::none()) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("gauss_legendre: empty or non-finite interval");
  }
  if (panel_count < 1) {
    throw DomainError("gauss_legendre: panel_count must be >= 1");
  }
  if (refinement.levels < 0 || !(refinement.ratio > 0.0 && refinement.ratio < 1.0)) {
    throw DomainError("gauss_legendre: refinement needs levels >= 0 and 0 < ratio < 1");
  }
  const QuadratureRule ref = gauss_legendre_reference(order);

  // Both ends graded inside a single panel would overlap.
  if (refinement.lower && refinement.upper && panel_count < 2) {
    panel_count = 2;
  }
  const double width = (b - a) / panel_count;
  // Next to a nonzero endpoint, panels thinner than ~1e-12 |endpoint| would
  // put nodes on the endpoint itself after rounding.
  const auto levels_at = [&](double end) {
    int k = 0;
    while (k < refinement.levels && width * std::pow(refinement.ratio, k + 1) >= 0x1.0p-40 * std::abs(end)) ++k;
    return k;
  };
  std::vector<double> breaks{a};
  if (refinement.lower) {
    for (int k = levels_at(a); k >= 1; --k) {
      breaks.push_back(a + width * std::pow(refinement.ratio, k));
    }
  }
  for (int p = 1; p < panel_count; ++p) {
    breaks.push_back(a + p * width);
  }
  if (refinement.upper) {
    for (int k = 1; k <= levels_at(b); ++k) {
      breaks.push_back(b - width * std::pow(refinement.ratio, k));
    }
  }
  breaks.push_back(b);

  QuadratureRule rule;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p];
    const double hi = breaks[p + 1];
    if (!(hi > lo)) {
      continue;
    }
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      rule.nodes.push_back(mid + half * ref.nodes[i]);
      rule.weights.push_back(half * ref.weights[i]);
    }
  }
  return rule;
}

/// Sum of w_i f(x_i); works for real and complex integrands.
template <typename F>
auto integrate(const QuadratureRule& rule, F&& f) {
  using Value = decltype(f(0.0));
  if constexpr (std::is_floating_point_v<Value>) {
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      sum.add(rule.weights[i] * f(rule.nodes[i]));
    }
    return sum.value();
  } else {
    ComplexCompensatedSum sum;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      sum.add(rule.weights[i] * f(rule.nodes[i]));
    }
    return sum.value();
  }
}

}  // namespace circle_sqm::numerics
