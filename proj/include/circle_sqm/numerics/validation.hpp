#pragma once

// Cross-checks of the closed-form results against independent numerics. The
// finite-difference path only ever sees the potential.

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/numerics/quadrature.hpp"
#include "circle_sqm/numerics/report.hpp"
#include "circle_sqm/numerics/residual.hpp"
#include "circle_sqm/numerics/richardson.hpp"
#include "circle_sqm/numerics/tridiagonal.hpp"
#include "circle_sqm/oscillator.hpp"

namespace circle_sqm::numerics {

using SystemDescriptor = std::variant<OscillatorSystem, CoulombSystem>;

/// FD grids N and 2N, combined by Richardson extrapolation of order 2.
struct GridSchedule {
  int coarse = 4096;
  int fine = 8192;
};

struct ValidationTolerances {
  double spectrum = 1e-5;
  double norm = 1e-8;
  double min_order = 1.8;
  double duality = 1e-12;
  double norm_consistency = 1e-10;
};

inline GridSchedule default_schedule(const SystemDescriptor& sys) {
  return std::holds_alternative<CoulombSystem>(sys) ? GridSchedule{8192, 16384} : GridSchedule{4096, 8192};
}

struct FdSpectrum {
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;
};

template <typename Potential>
FdSpectrum fd_spectrum(Potential&& potential, double radius, Interval domain, GridSchedule schedule,
                       std::size_t count) {
  FdSpectrum out;
  out.coarse = eigenvalues_tridiagonal(build_hamiltonian(potential, radius, domain, schedule.coarse), count);
  out.fine = eigenvalues_tridiagonal(build_hamiltonian(potential, radius, domain, schedule.fine), count);
  for (std::size_t i = 0; i < count; ++i) {
    out.extrapolated.push_back(richardson(out.coarse[i], out.fine[i], 2));
  }
  return out;
}

/// Rule for (0, pi/2) or (0, pi) with both endpoints graded.
inline QuadratureRule norm_rule(double upper) { return gauss_legendre(16, 20, 0.0, upper, EndpointRefinement::both()); }

/// R int_0^{pi/2} Psi_n Psi_m dphi.
inline double oscillator_overlap(const OscillatorSystem& sys, int n, int m) {
  const QuadratureRule rule = norm_rule(kHalfPi);
  return sys.radius() * integrate(rule, [&](double phi) {
           return oscillator::wavefunction(sys, n, phi) * oscillator::wavefunction(sys, m, phi);
         });
}

/// R int_0^pi Psi_n Psi_m^diamond dphi.
inline Complex coulomb_diamond_overlap(const CoulombSystem& sys, int n, int m) {
  const QuadratureRule rule = norm_rule(kPi);
  return sys.radius() * integrate(rule, [&](double phi) {
           return coulomb::wavefunction(sys, n, phi) * coulomb::diamond_conjugate(sys, m, phi);
         });
}

inline std::vector<Branch> admissible_branches(double k1) {
  std::vector<Branch> out{Branch::Plus};
  if (branch_admissible(Branch::Minus, k1)) {
    out.push_back(Branch::Minus);
  }
  return out;
}

namespace detail {

inline ValidationReport fd_order_report(const std::string& id, const std::vector<double>& analytic,
                                        const FdSpectrum& fd, double min_order, const std::string& details) {
  std::vector<double> orders;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    orders.push_back(observed_order(fd.coarse[i] - analytic[i], fd.fine[i] - analytic[i]));
  }
  ValidationReport r = make_report(id, std::vector<double>(orders.size(), 2.0), orders, (2.0 - min_order) / 2.0);
  r.convergence_rate = *std::min_element(orders.begin(), orders.end());
  r.details = details;
  return r;
}

inline ValidationReport fd_spectrum_report(const std::string& id, const std::vector<double>& analytic,
                                           const FdSpectrum& fd, double tol, const std::string& details) {
  ValidationReport r = make_report(id, analytic, fd.extrapolated, tol);
  std::vector<double> orders;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    orders.push_back(observed_order(fd.coarse[i] - analytic[i], fd.fine[i] - analytic[i]));
  }
  r.convergence_rate = *std::min_element(orders.begin(), orders.end());
  r.details = details;
  return r;
}

inline std::vector<ValidationReport> validate_oscillator(const OscillatorSystem& sys, const std::string& id,
                                                         int n_max, GridSchedule schedule,
                                                         const ValidationTolerances& tol) {
  std::vector<ValidationReport> reports;
  const std::string grid = fmt::format("grid={}/{} richardson_order=2", schedule.coarse, schedule.fine);
  const auto potential = [&sys](double phi) { return oscillator::potential(sys, phi); };
  const std::size_t count = static_cast<std::size_t>(n_max) + 1;

  // FD needs boundary exponents >= 1 on every Dirichlet end: k1 > 1/2 on
  // (0, pi/2), or the regular k1 = 1/2 case on (-pi/2, pi/2).
  if (sys.k1() >= 0.5) {
    std::vector<double> analytic;
    if (sys.confined_to_quadrant()) {
      const OscillatorSystem plus = sys.with_branch(Branch::Plus);
      for (int n = 0; n <= n_max; ++n) analytic.push_back(oscillator::energy_level(plus, n));
    } else {
      for (const auto& e : oscillator::spectrum(sys, n_max)) analytic.push_back(e.energy);
      analytic.resize(count);
    }
    const FdSpectrum fd = fd_spectrum(potential, sys.radius(), sys.motion_domain(), schedule, count);
    reports.push_back(fd_spectrum_report(id + "/fd-spectrum", analytic, fd, tol.spectrum, grid));
    reports.push_back(fd_order_report(id + "/fd-order", analytic, fd, tol.min_order, grid));
  }

  std::vector<double> norms;
  std::vector<double> overlaps;
  std::vector<double> orders;
  std::vector<double> routes_a;
  std::vector<double> routes_b;
  for (Branch b : admissible_branches(sys.k1())) {
    const OscillatorSystem bs = sys.with_branch(b);
    for (int n = 0; n <= n_max; ++n) {
      norms.push_back(oscillator_overlap(bs, n, n));
      if (n > 0) overlaps.push_back(oscillator_overlap(bs, n, n - 1));
      const double eps = oscillator::energy_epsilon(n, bs.k0(), bs.k1(), b);
      const auto psi = [&bs, n](double phi) { return oscillator::wavefunction(bs, n, phi); };
      const auto bracket = poschl_teller_bracket({eps, bs.k0(), bs.k1()});
      orders.push_back(residual_order(psi, bracket, {0.0, kHalfPi}, 128));
      routes_a.push_back(oscillator::energy_level(bs, n));
      routes_b.push_back(oscillator::energy_from_epsilon(bs, eps));
    }
  }
  ValidationReport norm = make_report(id + "/l2-norm", std::vector<double>(norms.size(), 1.0), norms, tol.norm);
  norm.details = "gauss-legendre 16 panels x 20 nodes, 40 graded levels per end";
  reports.push_back(std::move(norm));
  if (!overlaps.empty()) {
    reports.push_back(
        make_report(id + "/orthogonality", std::vector<double>(overlaps.size(), 0.0), overlaps, tol.norm));
  }
  ValidationReport res =
      make_report(id + "/residual-order", std::vector<double>(orders.size(), 2.0), orders, (2.0 - tol.min_order) / 2.0);
  res.convergence_rate = *std::min_element(orders.begin(), orders.end());
  res.details = "nodes=128/256 margin=0.05";
  reports.push_back(std::move(res));
  reports.push_back(make_report(id + "/energy-routes", routes_a, routes_b, 1e-12));
  return reports;
}

inline std::vector<ValidationReport> validate_coulomb(const CoulombSystem& sys, const std::string& id, int n_max,
                                                      GridSchedule schedule, const ValidationTolerances& tol) {
  std::vector<ValidationReport> reports;
  const std::string grid = fmt::format("grid={}/{} richardson_order=2", schedule.coarse, schedule.fine);
  const std::size_t count = static_cast<std::size_t>(n_max) + 1;

  // Sub-linear boundary exponents (nu < 1) wreck the FD convergence rate, so
  // those families are covered by norms and residuals only.
  const CoulombSystem plus = sys.with_branch(Branch::Plus);
  if (plus.nu() >= 1.0) {
    std::vector<double> analytic;
    for (int n = 0; n <= n_max; ++n) analytic.push_back(coulomb::energy_level(plus, n));
    const auto potential = [&sys](double phi) { return coulomb::potential(sys, phi); };
    const FdSpectrum fd = fd_spectrum(potential, sys.radius(), {0.0, kPi}, schedule, count);
    reports.push_back(fd_spectrum_report(id + "/fd-spectrum", analytic, fd, tol.spectrum, grid));
    reports.push_back(fd_order_report(id + "/fd-order", analytic, fd, tol.min_order, grid));
  }

  std::vector<double> norms_re;
  std::vector<double> norms_im;
  std::vector<double> c_sigma;
  std::vector<double> c_general;
  std::vector<double> orders;
  std::vector<double> e_direct;
  std::vector<double> e_dual;
  for (Branch b : admissible_branches(sys.k1())) {
    const CoulombSystem bs = sys.with_branch(b);
    for (int n = 0; n <= n_max; ++n) {
      const Complex norm = coulomb_diamond_overlap(bs, n, n);
      norms_re.push_back(norm.real());
      norms_im.push_back(norm.imag());
      const CoulombQuantumNumbers q = coulomb::quantize(bs, n);
      c_sigma.push_back(coulomb::norm_constant_sigma(n, q.nu, q.sigma, bs.radius()));
      c_general.push_back(std::pow(2.0, q.nu) *
                          std::abs(coulomb::norm_constant_general(n, q.k0, bs.k1(), bs.radius(), b)));
      const double e = coulomb::energy_level(bs, n);
      const auto psi = [&bs, n](double phi) { return coulomb::wavefunction(bs, n, phi); };
      orders.push_back(residual_order(psi, coulomb_bracket(bs, e), {0.0, kPi}, 128));
      e_direct.push_back(e);
      e_dual.push_back(coulomb::energy_from_duality(bs, n));
    }
  }
  ValidationReport norm =
      make_report(id + "/diamond-norm", std::vector<double>(norms_re.size(), 0.5), norms_re, tol.norm);
  norm.details = "gauss-legendre 16 panels x 20 nodes, 40 graded levels per end";
  reports.push_back(std::move(norm));
  reports.push_back(
      make_report(id + "/diamond-norm-imag", std::vector<double>(norms_im.size(), 0.0), norms_im, tol.norm));
  ValidationReport cons = make_report(id + "/norm-consistency", c_sigma, c_general, tol.norm_consistency);
  cons.details = "numeric = 2^nu |C_general| (theta-form to phi-form scale)";
  reports.push_back(std::move(cons));
  ValidationReport res =
      make_report(id + "/residual-order", std::vector<double>(orders.size(), 2.0), orders, (2.0 - tol.min_order) / 2.0);
  res.convergence_rate = *std::min_element(orders.begin(), orders.end());
  res.details = "nodes=128/256 margin=0.05";
  reports.push_back(std::move(res));
  reports.push_back(make_report(id + "/duality-closure", e_direct, e_dual, tol.duality));
  return reports;
}

}  // namespace detail

/// All cross-checks for one system: FD spectrum (when the boundary exponents
/// allow a clean h^2 rate), quadrature norms, ODE residual rates and the
/// algebraic energy routes. Case ids are prefixed with `id`.
inline std::vector<ValidationReport> validate_system(const SystemDescriptor& sys, int n_max, GridSchedule schedule,
                                                     const ValidationTolerances& tol = {},
                                                     const std::string& id = "system") {
  if (n_max < 0) {
    throw DomainError("validate_system: n_max must be >= 0");
  }
  if (schedule.coarse < 16 || schedule.fine != 2 * schedule.coarse) {
    throw DomainError("validate_system: grid schedule must be N, 2N with N >= 16");
  }
  return std::visit(
      [&](const auto& s) -> std::vector<ValidationReport> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OscillatorSystem>) {
          return detail::validate_oscillator(s, id, n_max, schedule, tol);
        } else {
          return detail::validate_coulomb(s, id, n_max, schedule, tol);
        }
      },
      sys);
}

}  // namespace circle_sqm::numerics
