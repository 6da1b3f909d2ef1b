#pragma once

// Singular Coulomb system on the circle, solved through its complex duality
// with the singular oscillator.
//
// The Schroedinger equation used throughout is
//   Psi'' + (2 R^2 E + 2 mu R cot|phi| + (p^2 - 1/4) / sin^2 phi) Psi = 0,
// i.e. V(phi) = -(mu/R) cot|phi| - (p^2 - 1/4) / (2 R^2 sin^2 phi), with
// k1^2 = 2 - 4 p^2 and nu = (1 +- k1) / 2 the boundary exponent at phi = 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "circle_sqm/compensated.hpp"
#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/specfun.hpp"

namespace circle_sqm {

class CoulombSystem {
 public:
  CoulombSystem(CircleGeometry geometry, double mu, double k1, Branch branch)
      : geometry_(geometry), mu_(mu), k1_(k1), branch_(branch) {
    if (!std::isfinite(mu) || mu <= 0.0) {
      throw DomainError("CoulombSystem: coupling mu must be finite and > 0");
    }
    if (!std::isfinite(k1) || k1 < 0.0 || k1 * k1 >= 2.0) {
      throw DomainError("CoulombSystem: 0 < p^2 <= 1/2 requires 0 <= k1 < sqrt(2)");
    }
    require_branch(branch, k1);
  }

  const CircleGeometry& geometry() const { return geometry_; }
  double radius() const { return geometry_.radius(); }
  double mu() const { return mu_; }
  double k1() const { return k1_; }
  Branch branch() const { return branch_; }
  double p_squared() const { return (2.0 - k1_ * k1_) / 4.0; }

  CoulombSystem with_branch(Branch b) const { return {geometry_, mu_, k1_, b}; }

  /// nu = (1 +- k1) / 2.
  double nu() const { return 0.5 * (1.0 + sign_of(branch_) * k1_); }

  /// With p^2 = 1/4 the centrifugal term vanishes and the motion covers both halves.
  bool moves_on_both_sides() const { return std::abs(k1_ * k1_ - 1.0) <= 1e-12; }

 private:
  CircleGeometry geometry_;
  double mu_;
  double k1_;
  Branch branch_;
};

struct CoulombQuantumNumbers {
  int n;
  double nu;
  double sigma;
  Complex k0;
};

enum class Parity { Even, Odd };

namespace coulomb {

inline double potential(const CoulombSystem& sys, double phi) {
  const double s = std::sin(phi);
  if (phi == 0.0 || std::abs(phi) == kPi || s == 0.0) {
    throw SingularPointError("Coulomb potential is singular at phi = " + std::to_string(phi));
  }
  const double r = sys.radius();
  const double abs_phi = std::abs(phi);
  return -(sys.mu() / r) * std::cos(abs_phi) / std::sin(abs_phi) -
         (sys.p_squared() - 0.25) / (2.0 * r * r * s * s);
}

/// The complex Poeschl-Teller data obtained with k = i mu:
///   eps = 2 R^2 E + 2 k R,  k0^2 = 2 R^2 E - 2 k R,  k1^2 = 2 - 4 p^2.
/// k0 is the root with Re k0 <= 0, matching k0 = -(n + nu) + i sigma on the
/// quantized locus.
inline PoschlTellerForm<Complex> duality_parameters(const CoulombSystem& sys, double energy) {
  const double r = sys.radius();
  const Complex k{0.0, sys.mu()};
  const Complex eps = 2.0 * r * r * energy + 2.0 * k * r;
  const Complex k0_sq = 2.0 * r * r * energy - 2.0 * k * r;
  Complex k0 = std::sqrt(k0_sq);
  if (k0.real() > 0.0) {
    k0 = -k0;
  }
  return {eps, k0, sys.k1()};
}

inline CoulombQuantumNumbers quantize(const CoulombSystem& sys, int n) {
  if (n < 0) {
    throw DomainError("quantize: n must be >= 0");
  }
  require_branch(sys.branch(), sys.k1());
  const double nu = sys.nu();
  const double sigma = sys.mu() * sys.radius() / (n + nu);
  return {n, nu, sigma, Complex{-(n + nu), sigma}};
}

/// E_n = (n + nu)^2 / (2 R^2) - mu^2 / (2 (n + nu)^2).
inline double energy_level(const CoulombSystem& sys, int n) {
  const CoulombQuantumNumbers q = quantize(sys, n);
  const double r = sys.radius();
  const double m = n + q.nu;
  return m * m / (2.0 * r * r) - sys.mu() * sys.mu() / (2.0 * m * m);
}

/// Same level carried as an unevaluated sum of its curvature and flat parts,
/// so that E_n - (flat limit) can be recovered without cancellation.
inline CompensatedValue energy_level_compensated(const CoulombSystem& sys, int n) {
  const CoulombQuantumNumbers q = quantize(sys, n);
  const double r = sys.radius();
  const double m = n + q.nu;
  return two_sum(m * m / (2.0 * r * r), -(sys.mu() * sys.mu() / (2.0 * m * m)));
}

/// Energy through the complex route: (2n +- k1 + k0 + 1)^2 = 2 R^2 E + 2 i mu R.
/// Throws InvariantError if the result is not real to 1e-10.
inline double energy_from_duality(const CoulombSystem& sys, int n) {
  const CoulombQuantumNumbers q = quantize(sys, n);
  const double r = sys.radius();
  const Complex root = 2.0 * n + sign_of(sys.branch()) * sys.k1() + q.k0 + 1.0;
  const Complex e = (root * root - Complex{0.0, 2.0 * sys.mu() * r}) / (2.0 * r * r);
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e.real()))) {
    throw InvariantError("energy_from_duality: imaginary residue " + std::to_string(e.imag()));
  }
  return e.real();
}

/// ln C_n(sigma) for the unified nu-form
///   C = e^{sigma pi/2} 2^nu |Gamma(nu + i sigma)| / Gamma(2 nu)
///       * sqrt(((n+nu)^2 + sigma^2) Gamma(n + 2 nu) / (4 pi R (n+nu) n!)).
/// For nu = 1 this is e^{sigma pi/2} |Gamma(1 + i sigma)| sqrt(((n+1)^2 + sigma^2) / (pi R)).
inline double ln_norm_constant_sigma(int n, double nu, double sigma, double radius) {
  if (n < 0 || !(nu > 0.0) || !(sigma >= 0.0) || !(radius > 0.0)) {
    throw DomainError("norm_constant_sigma: requires n >= 0, nu > 0, sigma >= 0, R > 0");
  }
  auto lg = [](Complex z) { return ln_gamma_complex(z).real(); };
  const double m = n + nu;
  const double inner = std::log(m * m + sigma * sigma) + lg(n + 2.0 * nu) -
                       std::log(4.0 * kPi * radius * m) - lg(n + 1.0);
  return sigma * kPi / 2.0 + nu * std::log(2.0) + lg(Complex{nu, sigma}) - lg(2.0 * nu) + 0.5 * inner;
}

inline double norm_constant_sigma(int n, double nu, double sigma, double radius) {
  return std::exp(ln_norm_constant_sigma(n, nu, sigma, radius));
}

/// Normalization constant of the theta-form solution obtained from the contour
/// argument; principal square root.
inline Complex norm_constant_general(int n, Complex k0, double k1, double radius, Branch branch) {
  if (n < 0 || !(radius > 0.0)) {
    throw DomainError("norm_constant_general: requires n >= 0 and R > 0");
  }
  const double s = sign_of(branch) * k1;
  const double nd = static_cast<double>(n);
  const Complex i{0.0, 1.0};
  const Complex ln_ratio = std::log(-i * k0) + std::log(2.0 * nd + k0 + s + 1.0) +
                           ln_gamma_complex(nd + 1.0 + s) + ln_gamma_complex(nd + k0 + s + 1.0) -
                           std::log(radius) - std::log(1.0 - std::exp(2.0 * i * kPi * k0)) -
                           std::log(2.0 * nd + s + 1.0) - ln_gamma_complex(nd + 1.0) -
                           2.0 * ln_gamma_complex(1.0 + s) - ln_gamma_complex(nd + k0 + 1.0);
  // principal argument of the ratio, then halve
  const Complex principal{ln_ratio.real(), std::remainder(ln_ratio.imag(), 2.0 * kPi)};
  return std::exp(0.5 * principal);
}

/// Psi_n(phi) = C (sin phi)^nu e^{-i phi (n - i sigma)} 2F1(-n, nu + i sigma; 2 nu; 1 - e^{2 i phi})
/// on 0 < phi < pi, with C = norm_constant_sigma, so that R int_0^pi |Psi|^2 dphi = 1/2.
inline Complex wavefunction(const CoulombSystem& sys, int n, double phi) {
  if (!(phi > 0.0 && phi < kPi)) {
    throw DomainError("Coulomb wavefunction: phi = " + std::to_string(phi) + " outside (0, pi)");
  }
  const CoulombQuantumNumbers q = quantize(sys, n);
  const double sin_phi = std::sin(phi);
  const Complex i{0.0, 1.0};
  // 1 - e^{2 i phi} without cancellation for small phi
  const Complex z = -2.0 * i * std::exp(i * phi) * sin_phi;
  const Complex poly = hyp2f1_terminating(n, Complex{q.nu, q.sigma}, 2.0 * q.nu, z);
  const double ln_mag = ln_norm_constant_sigma(n, q.nu, q.sigma, sys.radius()) +
                        q.nu * std::log(sin_phi) - q.sigma * phi;
  const Complex phase = std::exp(Complex{0.0, -static_cast<double>(n) * phi});
  return std::exp(ln_mag) * phase * poly;
}

/// Continuation to -pi < phi < 0 by the reflection phi -> -phi.
inline Complex reflected_wavefunction(const CoulombSystem& sys, int n, double phi) {
  if (!(std::abs(phi) < kPi) || phi == 0.0) {
    throw DomainError("reflected Coulomb wavefunction: phi must satisfy 0 < |phi| < pi");
  }
  return wavefunction(sys, n, std::abs(phi));
}

/// Psi^diamond(phi) = conj(Psi(-phi)) where Psi on negative angles is the
/// reflected solution.
inline Complex diamond_conjugate(const CoulombSystem& sys, int n, double phi) {
  return std::conj(reflected_wavefunction(sys, n, -phi));
}

/// Diamond operation on an arbitrary function of the angle.
template <typename F>
auto diamond(F f) {
  return [f](double phi) -> Complex { return std::conj(Complex(f(-phi))); };
}

/// Even and odd solutions on the full circle; only defined when p^2 = 1/4.
inline Complex extend_parity(const CoulombSystem& sys, int n, double phi, Parity parity) {
  if (!sys.moves_on_both_sides()) {
    throw BranchError("extend_parity: motion is confined to one side of phi = 0 unless k1^2 = 1");
  }
  if (!(std::abs(phi) < kPi)) {
    throw DomainError("extend_parity: phi must lie in (-pi, pi)");
  }
  if (phi == 0.0) {
    return 0.0;
  }
  const Complex value = wavefunction(sys, n, std::abs(phi));
  return (parity == Parity::Odd && phi < 0.0) ? -value : value;
}

struct SpectrumEntry {
  int n;
  Branch branch;
  double nu;
  double sigma;
  double energy;
};

/// Levels n = 0..n_max for every admissible branch, ascending in energy.
inline std::vector<SpectrumEntry> spectrum(const CoulombSystem& sys, int n_max) {
  if (n_max < 0) {
    throw DomainError("spectrum: n_max must be >= 0");
  }
  std::vector<SpectrumEntry> out;
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    if (!branch_admissible(b, sys.k1())) {
      continue;
    }
    const CoulombSystem branch_sys = sys.with_branch(b);
    for (int n = 0; n <= n_max; ++n) {
      const CoulombQuantumNumbers q = quantize(branch_sys, n);
      out.push_back({n, b, q.nu, q.sigma, energy_level(branch_sys, n)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.energy < b.energy; });
  return out;
}

}  // namespace coulomb
}  // namespace circle_sqm
