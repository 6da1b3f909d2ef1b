#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "circle_sqm/errors.hpp"
#include "circle_sqm/specfun.hpp"

namespace circle_sqm {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Circle s0^2 + s1^2 = R^2 with polar angle phi: s0 = R cos(phi), s1 = R sin(phi).
class CircleGeometry {
 public:
  explicit CircleGeometry(double radius) : radius_(radius) {
    if (!std::isfinite(radius) || radius <= 0.0) {
      throw DomainError("CircleGeometry: radius R must be finite and > 0");
    }
  }
  double radius() const { return radius_; }

 private:
  double radius_;
};

/// The sign in front of k1 in the +-k1 solution families.
enum class Branch { Plus, Minus };

inline double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

inline std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

/// Minus requires 0 < |k1| <= 1/2.
inline bool branch_admissible(Branch b, double k1) {
  return b == Branch::Plus || (std::abs(k1) > 0.0 && std::abs(k1) <= 0.5);
}

inline void require_branch(Branch b, double k1) {
  if (!branch_admissible(b, k1)) {
    throw BranchError("branch rule violated: the minus branch requires 0 < |k1| <= 1/2 (k1 = " +
                      std::to_string(k1) + ")");
  }
}

/// Reduced equation Psi'' + [eps - (k0^2 - 1/4)/cos^2 - (k1^2 - 1/4)/sin^2] Psi = 0.
/// T is double for the oscillator and Complex for the dual Coulomb problem.
template <typename T>
struct PoschlTellerForm {
  T epsilon;
  T k0;
  double k1;

  T k0_squared() const { return k0 * k0; }
};

struct Interval {
  double lower;
  double upper;

  double width() const { return upper - lower; }
  bool contains_open(double x) const { return x > lower && x < upper; }
};

}  // namespace circle_sqm
