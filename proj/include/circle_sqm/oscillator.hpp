#pragma once

// Singular oscillator on the circle:
//   V(phi) = (w^2 R^2 / 2) tan^2(phi) + (k1^2 - 1/4) / (2 R^2 sin^2(phi)).

#include <algorithm>
#include <cmath>
#include <vector>

#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/specfun.hpp"

namespace circle_sqm {

class OscillatorSystem {
 public:
  OscillatorSystem(CircleGeometry geometry, double omega, double k1, Branch branch)
      : geometry_(geometry), omega_(omega), k1_(k1), branch_(branch) {
    if (!std::isfinite(omega) || omega < 0.0) {
      throw DomainError("OscillatorSystem: omega must be finite and >= 0");
    }
    if (!std::isfinite(k1) || k1 <= 0.0) {
      throw DomainError("OscillatorSystem: k1 must be finite and > 0");
    }
    require_branch(branch, k1);
  }

  const CircleGeometry& geometry() const { return geometry_; }
  double radius() const { return geometry_.radius(); }
  double omega() const { return omega_; }
  double k1() const { return k1_; }
  Branch branch() const { return branch_; }

  OscillatorSystem with_branch(Branch b) const { return {geometry_, omega_, k1_, b}; }

  /// k1 > 1/2 confines the particle to (0, pi/2); otherwise it moves on (-pi/2, pi/2).
  bool confined_to_quadrant() const { return k1_ > 0.5; }

  Interval motion_domain() const {
    return confined_to_quadrant() ? Interval{0.0, kHalfPi} : Interval{-kHalfPi, kHalfPi};
  }

  /// w^2 R^4, the oscillator strength in reduced units.
  double reduced_strength() const {
    const double r2 = radius() * radius();
    return omega_ * omega_ * r2 * r2;
  }

  double k0() const { return std::sqrt(reduced_strength() + 0.25); }

 private:
  CircleGeometry geometry_;
  double omega_;
  double k1_;
  Branch branch_;
};

namespace oscillator {

inline double potential(const OscillatorSystem& sys, double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  if (phi == 0.0 || std::abs(phi) == kHalfPi || std::abs(phi) == kPi || s == 0.0 || c == 0.0) {
    throw SingularPointError("oscillator potential is singular at phi = " + std::to_string(phi));
  }
  const double r = sys.radius();
  const double t = s / c;
  return 0.5 * sys.omega() * sys.omega() * r * r * t * t +
         (sys.k1() * sys.k1() - 0.25) / (2.0 * r * r * s * s);
}

/// eps = 2 R^2 E + w^2 R^4, k0 = +sqrt(w^2 R^4 + 1/4).
inline PoschlTellerForm<double> reduce_to_poschl_teller(const OscillatorSystem& sys, double energy) {
  const double r = sys.radius();
  return {2.0 * r * r * energy + sys.reduced_strength(), sys.k0(), sys.k1()};
}

/// Inverse of the reduction: E = (eps - w^2 R^4) / (2 R^2).
inline double energy_from_epsilon(const OscillatorSystem& sys, double epsilon) {
  const double r = sys.radius();
  return (epsilon - sys.reduced_strength()) / (2.0 * r * r);
}

/// eps_n = (2n +- k1 + k0 + 1)^2.
inline double energy_epsilon(int n, double k0, double k1, Branch branch) {
  if (n < 0) {
    throw DomainError("energy_epsilon: n must be >= 0");
  }
  require_branch(branch, k1);
  const double m = 2.0 * n + sign_of(branch) * k1 + 1.0;
  return (m + k0) * (m + k0);
}

/// E_n = [(2n +- k1 + 1/2)^2 + (2 k0 + 1)(2n +- k1 + 1)] / (2 R^2).
inline double energy_level(const OscillatorSystem& sys, int n) {
  if (n < 0) {
    throw DomainError("energy_level: n must be >= 0");
  }
  const double r = sys.radius();
  const double shift = 2.0 * n + sign_of(sys.branch()) * sys.k1();
  const double a = shift + 0.5;
  return (a * a + (2.0 * sys.k0() + 1.0) * (shift + 1.0)) / (2.0 * r * r);
}

/// log of the squared normalization prefactor, all gammas as ln-gamma differences.
inline double ln_norm_squared(const OscillatorSystem& sys, int n) {
  const double s = sign_of(sys.branch());
  const double k0 = sys.k0();
  const double k1 = s * sys.k1();
  const double nd = static_cast<double>(n);
  auto lg = [](double x) { return ln_gamma_complex(x).real(); };
  return std::log(2.0 * (2.0 * nd + k0 + k1 + 1.0)) + lg(nd + k0 + k1 + 1.0) + lg(nd + k1 + 1.0) -
         2.0 * lg(1.0 + k1) - lg(nd + k0 + 1.0) - lg(nd + 1.0) - std::log(sys.radius());
}

/// Normalized eigenfunction, R * int_0^{pi/2} Psi_n^2 dphi = 1.
///
/// On the extended domain (-pi/2, pi/2) used when k1 <= 1/2, the plus family is
/// continued as an odd function and the minus family as an even one.
inline double wavefunction(const OscillatorSystem& sys, int n, double phi) {
  if (n < 0) {
    throw DomainError("oscillator wavefunction: n must be >= 0");
  }
  const Interval domain = sys.motion_domain();
  if (!domain.contains_open(phi)) {
    throw DomainError("oscillator wavefunction: phi = " + std::to_string(phi) +
                      " is outside the open motion domain");
  }
  const double s = sign_of(sys.branch());
  const double k0 = sys.k0();
  const double k1 = s * sys.k1();
  const double sin_phi = std::sin(phi);
  const double cos_phi = std::cos(phi);
  const double x = sin_phi * sin_phi;
  const double poly =
      hyp2f1_terminating(n, n + k0 + k1 + 1.0, 1.0 + k1, x).real();
  const double envelope = std::pow(std::abs(sin_phi), 0.5 + k1) * std::pow(cos_phi, 0.5 + k0);
  const double parity = (phi < 0.0 && sys.branch() == Branch::Plus) ? -1.0 : 1.0;
  return parity * std::exp(0.5 * ln_norm_squared(sys, n)) * envelope * poly;
}

struct SpectrumEntry {
  int n;
  Branch branch;
  double energy;
};

/// Levels n = 0..n_max for every admissible branch, ascending in energy.
inline std::vector<SpectrumEntry> spectrum(const OscillatorSystem& sys, int n_max) {
  if (n_max < 0) {
    throw DomainError("spectrum: n_max must be >= 0");
  }
  std::vector<SpectrumEntry> out;
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    if (!branch_admissible(b, sys.k1())) {
      continue;
    }
    const OscillatorSystem branch_sys = sys.with_branch(b);
    for (int n = 0; n <= n_max; ++n) {
      out.push_back({n, b, energy_level(branch_sys, n)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.energy < b.energy; });
  return out;
}

}  // namespace oscillator
}  // namespace circle_sqm
