#pragma once

// R -> infinity with R phi = x fixed: the circle levels approach the flat
// one-dimensional Coulomb levels -mu^2 / (2 (n + nu)^2) and the wavefunctions
// approach y^nu e^{-|y|/2} 1F1(-n; 2 nu; y), y = 2 mu x / (n + nu).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/numerics/report.hpp"
#include "circle_sqm/specfun.hpp"

namespace circle_sqm::numerics {

struct ContractionFrame {
  /// strictly increasing radii
  std::vector<double> radii;
  /// sample points in the scaled flat coordinate y = 2 mu x / (n + nu)
  std::vector<double> y_grid;

  static ContractionFrame standard() {
    ContractionFrame f{{1e2, 1e3, 1e4}, {}};
    for (int k = 1; k <= 120; ++k) f.y_grid.push_back(0.25 * k);
    return f;
  }
};

/// x = (n + nu) y / (2 mu).
inline double flat_coordinate(double y, int n, double nu, double mu) { return (n + nu) * y / (2.0 * mu); }

inline double flat_energy(double mu, int n, double nu) { return -mu * mu / (2.0 * (n + nu) * (n + nu)); }

/// sqrt(mu) / Gamma(2 nu) / (n + nu) * sqrt(Gamma(n + 2 nu) / (2 n!)) y^nu e^{-|y|/2} 1F1(-n; 2 nu; y).
inline double flat_wavefunction(double mu, int n, double nu, double y) {
  auto lg = [](double v) { return ln_gamma_complex(v).real(); };
  const double ln_pref = 0.5 * std::log(mu) - lg(2.0 * nu) - std::log(n + nu) +
                         0.5 * (lg(n + 2.0 * nu) - std::log(2.0) - lg(n + 1.0));
  return std::exp(ln_pref) * std::pow(std::abs(y), nu) * std::exp(-0.5 * std::abs(y)) *
         hyp1f1_terminating(n, 2.0 * nu, y).real();
}

/// Energy-gap and wavefunction-shape convergence for level n of `sys` as the
/// radius runs through frame.radii (mu, k1 and branch held fixed).
inline std::vector<ValidationReport> contraction_check(const CoulombSystem& sys, int n, const ContractionFrame& frame,
                                                       const std::string& id = "contraction") {
  if (frame.radii.size() < 2 || frame.y_grid.empty()) {
    throw DomainError("contraction_check: need at least two radii and a non-empty y grid");
  }
  for (std::size_t i = 1; i < frame.radii.size(); ++i) {
    if (!(frame.radii[i] > frame.radii[i - 1])) {
      throw DomainError("contraction_check: radii must be strictly increasing");
    }
  }
  const double mu = sys.mu();
  const double nu = sys.nu();
  const double flat = flat_energy(mu, n, nu);

  std::vector<double> gap_expected;
  std::vector<double> gap_measured;
  std::vector<double> deviation;
  std::vector<double> flat_values;
  for (double y : frame.y_grid) flat_values.push_back(flat_wavefunction(mu, n, nu, y));
  double flat_peak = 0.0;
  for (double v : flat_values) flat_peak = std::max(flat_peak, std::abs(v));

  for (double radius : frame.radii) {
    const CoulombSystem at_r(CircleGeometry(radius), mu, sys.k1(), sys.branch());
    const CompensatedValue e = coulomb::energy_level_compensated(at_r, n);
    // e.hi and flat agree to within a factor of two, so e.hi - flat is exact
    gap_measured.push_back((e.hi - flat) + e.lo);
    gap_expected.push_back((n + nu) * (n + nu) / (2.0 * radius * radius));

    std::vector<double> circle_values;
    for (double y : frame.y_grid) {
      const double phi = flat_coordinate(y, n, nu, mu) / radius;
      if (!(phi > 0.0 && phi < kPi)) {
        throw DomainError(fmt::format("contraction_check: x/R = {} leaves (0, pi) at R = {}", phi, radius));
      }
      circle_values.push_back(coulomb::wavefunction(at_r, n, phi).real());
    }
    // single positive scale fitted by least squares
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < circle_values.size(); ++i) {
      num += circle_values[i] * flat_values[i];
      den += circle_values[i] * circle_values[i];
    }
    const double scale = num / den;
    double worst = 0.0;
    for (std::size_t i = 0; i < circle_values.size(); ++i) {
      worst = std::max(worst, std::abs(scale * circle_values[i] - flat_values[i]));
    }
    deviation.push_back(worst / flat_peak);
  }

  std::vector<ValidationReport> out;
  ValidationReport gap = make_report(id + "/energy-gap", gap_expected, gap_measured, 1e-14);
  gap.convergence_rate = -log_log_slope(frame.radii, gap_measured);
  gap.details = fmt::format("n={} nu={} mu={}", n, nu, mu);
  out.push_back(std::move(gap));
  ValidationReport shape = make_report(id + "/wavefunction-shape", std::vector<double>(deviation.size(), 0.0),
                                       deviation, 0.0, Criterion::StrictlyDecreasing);
  shape.convergence_rate = -log_log_slope(frame.radii, deviation);
  shape.details = fmt::format("n={} nu={} mu={} y_points={} sup-norm after least-squares scale fit", n, nu, mu,
                              frame.y_grid.size());
  out.push_back(std::move(shape));
  return out;
}

}  // namespace circle_sqm::numerics
