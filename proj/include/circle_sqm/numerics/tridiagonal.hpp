#pragma once

// Second-order finite-difference Hamiltonian on the circle and a Sturm-sequence
// bisection eigensolver for the resulting symmetric tridiagonal matrix.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"

namespace circle_sqm::numerics {

/// Symmetric tridiagonal matrix on a cell-centred grid x_i = grid_offset + i * grid_step.
struct TridiagonalMatrix {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  double grid_step = 0.0;
  double grid_offset = 0.0;

  std::size_t size() const { return diagonal.size(); }

  double node(std::size_t i) const { return grid_offset + static_cast<double>(i) * grid_step; }
};

/// Discretizes H = -(1 / 2R^2) d^2/dphi^2 + V(phi) on N cell-centred nodes
/// phi_i = a + (i + 1/2) h, h = (b - a) / N. Dirichlet conditions are imposed
/// at a and b themselves through mirrored ghost values psi_{-1} = -psi_0 and
/// psi_N = -psi_{N-1}; no node touches an endpoint.
template <typename Potential>
TridiagonalMatrix build_hamiltonian(Potential&& potential, double radius, Interval domain, int nodes) {
  if (nodes < 16) {
    throw DomainError("build_hamiltonian: need at least 16 nodes");
  }
  if (!(radius > 0.0) || !(domain.upper > domain.lower)) {
    throw DomainError("build_hamiltonian: requires R > 0 and a non-empty interval");
  }
  TridiagonalMatrix t;
  t.grid_step = domain.width() / nodes;
  t.grid_offset = domain.lower + 0.5 * t.grid_step;
  const double kinetic = 1.0 / (radius * radius * t.grid_step * t.grid_step);
  t.diagonal.resize(nodes);
  t.off_diagonal.assign(nodes - 1, -0.5 * kinetic);
  for (int i = 0; i < nodes; ++i) {
    const double phi = t.node(i);
    const double v = potential(phi);
    if (!std::isfinite(v)) {
      throw SingularPointError("build_hamiltonian: potential not finite at node phi = " + std::to_string(phi));
    }
    t.diagonal[i] = kinetic + v;
  }
  t.diagonal.front() += 0.5 * kinetic;
  t.diagonal.back() += 0.5 * kinetic;
  return t;
}

/// Number of eigenvalues strictly below x (LDL^T inertia).
inline std::size_t sturm_count(const TridiagonalMatrix& t, double x) {
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = t.diagonal[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) {
      q = -tiny;
    }
    if (q < 0.0) {
      ++count;
    }
    if (i + 1 == t.size()) {
      break;
    }
    const double e = t.off_diagonal[i];
    q = t.diagonal[i + 1] - x - e * e / q;
  }
  return count;
}

/// Lowest `count` eigenvalues, ascending, by bisection on the Sturm count.
inline std::vector<double> eigenvalues_tridiagonal(const TridiagonalMatrix& t, std::size_t count) {
  const std::size_t n = t.size();
  if (n == 0 || t.off_diagonal.size() + 1 != n) {
    throw DomainError("eigenvalues_tridiagonal: inconsistent matrix dimensions");
  }
  if (count > n) {
    throw DomainError("eigenvalues_tridiagonal: requested more eigenvalues than the dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(t.diagonal[i]) || (i + 1 < n && !std::isfinite(t.off_diagonal[i]))) {
      throw ConvergenceError("eigenvalues_tridiagonal: non-finite matrix entry, bisection cannot converge");
    }
  }
  // Gershgorin enclosure
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - r);
    hi = std::max(hi, t.diagonal[i] + r);
  }
  const double norm = std::max(std::abs(lo), std::abs(hi));
  const double abs_floor = 2.0 * std::numeric_limits<double>::epsilon() * norm;
  lo -= abs_floor;
  hi += abs_floor;

  constexpr int kMaxIterations = 400;
  std::vector<double> values;
  values.reserve(count);
  double lower_bound = lo;
  for (std::size_t k = 0; k < count; ++k) {
    double a = lower_bound;
    double b = hi;
    int iter = 0;
    while (true) {
      const double mid = 0.5 * (a + b);
      const double tol = std::max(1e-12 * std::abs(mid), abs_floor);
      if (b - a <= tol || mid == a || mid == b) {
        break;
      }
      if (++iter > kMaxIterations) {
        throw ConvergenceError("eigenvalues_tridiagonal: bisection did not converge");
      }
      if (sturm_count(t, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values.push_back(0.5 * (a + b));
    lower_bound = a;
  }
  return values;
}

}  // namespace circle_sqm::numerics
