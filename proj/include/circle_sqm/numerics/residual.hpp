#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/oscillator.hpp"

namespace circle_sqm::numerics {

struct ResidualSample {
  double max_residual;
  double grid_step;
};

/// max_i |Psi''(phi_i) + q(phi_i) Psi(phi_i)| over the cell-centred nodes
/// phi_i = a + (i + 1/2) width / nodes lying in the domain shrunk by
/// `margin * width` at each end, with a three-point second difference of step
/// h = width / (nodes * refine). Trimming keeps the stencil away from the
/// singular endpoints, so the residual decays like h^2.
template <typename Wavefunction, typename Bracket>
ResidualSample ode_residual(Wavefunction&& psi, Bracket&& bracket, Interval domain, int nodes, double margin = 0.05,
                            int refine = 1) {
  if (nodes < 4 || refine < 1 || !(margin >= 0.0 && margin < 0.5)) {
    throw DomainError("ode_residual: need nodes >= 4, refine >= 1 and 0 <= margin < 1/2");
  }
  const double width = domain.width();
  const double spacing = width / nodes;
  const double h = spacing / refine;
  const double lo = domain.lower + margin * width;
  const double hi = domain.upper - margin * width;
  double worst = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double phi = domain.lower + (i + 0.5) * spacing;
    if (phi < lo || phi > hi || phi - h <= domain.lower || phi + h >= domain.upper) {
      continue;
    }
    const Complex centre = psi(phi);
    const Complex second = (Complex(psi(phi + h)) - 2.0 * centre + Complex(psi(phi - h))) / (h * h);
    const Complex r = second + Complex(bracket(phi)) * centre;
    worst = std::max({worst, std::abs(r.real()), std::abs(r.imag())});
  }
  return {worst, h};
}

/// Observed order p from the residuals with stencil steps h and h/2 on the
/// same evaluation nodes.
template <typename Wavefunction, typename Bracket>
double residual_order(Wavefunction&& psi, Bracket&& bracket, Interval domain, int nodes, double margin = 0.05) {
  const ResidualSample coarse = ode_residual(psi, bracket, domain, nodes, margin, 1);
  const ResidualSample fine = ode_residual(psi, bracket, domain, nodes, margin, 2);
  return std::log2(coarse.max_residual / fine.max_residual);
}

/// eps - (k0^2 - 1/4)/cos^2 - (k1^2 - 1/4)/sin^2.
inline auto poschl_teller_bracket(PoschlTellerForm<double> form) {
  return [form](double phi) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return form.epsilon - (form.k0 * form.k0 - 0.25) / (c * c) - (form.k1 * form.k1 - 0.25) / (s * s);
  };
}

/// 2 R^2 E + 2 mu R cot|phi| + (p^2 - 1/4)/sin^2.
inline auto coulomb_bracket(const CoulombSystem& sys, double energy) {
  const double r = sys.radius();
  const double mu = sys.mu();
  const double p2 = sys.p_squared();
  return [r, mu, p2, energy](double phi) {
    const double s = std::sin(phi);
    const double a = std::abs(phi);
    return 2.0 * r * r * energy + 2.0 * mu * r * std::cos(a) / std::sin(a) + (p2 - 0.25) / (s * s);
  };
}

}  // namespace circle_sqm::numerics
