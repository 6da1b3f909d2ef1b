#pragma once

#include <cmath>

#include "circle_sqm/errors.hpp"

namespace circle_sqm::numerics {

/// Removes the leading h^order error term from values on grids h and h/2.
inline double richardson(double coarse, double fine, int order) {
  if (order < 1) {
    throw DomainError("richardson: order must be >= 1");
  }
  const double f = std::ldexp(1.0, order);
  return (f * fine - coarse) / (f - 1.0);
}

/// log2 of the error ratio between grids h and h/2.
inline double observed_order(double coarse_error, double fine_error) {
  return std::log2(std::abs(coarse_error) / std::abs(fine_error));
}

}  // namespace circle_sqm::numerics
