#pragma once

// Special functions used by the closed-form wavefunctions and normalization
// constants: complex log-gamma (Lanczos), |Gamma|, Pochhammer symbols and the
// terminating 2F1 / 1F1 polynomials.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "circle_sqm/double_double.hpp"
#include "circle_sqm/errors.hpp"

namespace circle_sqm {

using Complex = std::complex<double>;

namespace detail {

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

inline bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// Godfrey's g = 607/128, 15-term Lanczos set.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

inline Complex ln_gamma_lanczos(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoeff[0];
  for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
    series += kLanczosCoeff[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(pi z), written so that large |Im z| neither overflows nor cancels.
inline Complex ln_sin_pi(Complex z) {
  const Complex w = std::numbers::pi * z;
  const Complex i{0.0, 1.0};
  if (w.imag() >= 0.0) {
    return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) - std::log(-2.0 * i);
  }
  return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(2.0 * i);
}

}  // namespace detail

/// log Gamma(z). The real part is exact to ~1e-14; the imaginary part is only
/// defined modulo 2*pi on the reflected half-plane Re z < 1/2, which is all that
/// exp() and |Gamma| need.
inline Complex ln_gamma_complex(Complex z) {
  detail::require_finite(z, "ln_gamma_complex");
  if (detail::is_nonpositive_integer(z)) {
    throw PoleError("ln_gamma_complex: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - detail::ln_sin_pi(z) - detail::ln_gamma_lanczos(1.0 - z);
  }
  return detail::ln_gamma_lanczos(z);
}

inline Complex gamma_complex(Complex z) { return std::exp(ln_gamma_complex(z)); }

inline double gamma_abs(Complex z) { return std::exp(ln_gamma_complex(z).real()); }

/// Rising factorial (a)_j by direct product, so (-m)_j is exactly zero for j > m.
inline Complex pochhammer(Complex a, int j) {
  detail::require_finite(a, "pochhammer");
  if (j < 0) {
    throw DomainError("pochhammer: negative order");
  }
  Complex p = 1.0;
  for (int k = 0; k < j; ++k) {
    p *= a + static_cast<double>(k);
  }
  return p;
}

namespace detail {

inline void check_lower_parameter(int n, Complex c, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": degree must be non-negative");
  }
  require_finite(c, what);
  for (int j = 0; j < n; ++j) {
    if (c + static_cast<double>(j) == Complex{0.0, 0.0}) {
      throw DegenerateDenominator(std::string(what) + ": lower parameter c = " +
                                  std::to_string(c.real()) + " is a forbidden non-positive integer");
    }
  }
}

}  // namespace detail

namespace detail {

/// sum_j prod_{k<j} (k - n)(b + k) x / ((c + k)(k + 1)), the b factor only when
/// `with_b`. Terms and sum are carried in double-double: inputs are exact, so
/// the only rounding that survives cancellation is the final one.
inline Complex terminating_series(int n, Complex b, bool with_b, Complex c, Complex x) {
  const ComplexDD xd(x);
  ComplexDD term(1.0);
  ComplexDD sum(1.0);
  for (int j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const ComplexDD cj(exact_sum(c.real(), jd), c.imag());
    ComplexDD num = xd * ComplexDD(jd - n);
    if (with_b) {
      num = num * ComplexDD(exact_sum(b.real(), jd), b.imag());
    }
    term = term * num / (cj * ComplexDD(jd + 1.0));
    sum = sum + term;
  }
  return sum.to_complex();
}

}  // namespace detail

/// 2F1(-n, b; c; x), the degree-n polynomial, by forward term recurrence.
inline Complex hyp2f1_terminating(int n, Complex b, Complex c, Complex x) {
  detail::check_lower_parameter(n, c, "hyp2f1_terminating");
  detail::require_finite(b, "hyp2f1_terminating");
  detail::require_finite(x, "hyp2f1_terminating");
  return detail::terminating_series(n, b, true, c, x);
}

/// 1F1(-n; c; y).
inline Complex hyp1f1_terminating(int n, Complex c, Complex y) {
  detail::check_lower_parameter(n, c, "hyp1f1_terminating");
  detail::require_finite(y, "hyp1f1_terminating");
  return detail::terminating_series(n, 0.0, false, c, y);
}

}  // namespace circle_sqm
