#pragma once

// Double-double arithmetic (about 106 significand bits) built on fma, and a
// minimal complex type on top of it. Used where a terminating series
// cancels badly in plain double.

#include <cmath>
#include <complex>

#include "circle_sqm/compensated.hpp"

namespace circle_sqm {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  DoubleDouble() = default;
  DoubleDouble(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit by design
  DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

/// a + b without rounding.
inline DoubleDouble exact_sum(double a, double b) {
  const CompensatedValue s = two_sum(a, b);
  return {s.hi, s.lo};
}

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  const CompensatedValue s = two_sum(a.hi, b.hi);
  const CompensatedValue t = two_sum(a.lo, b.lo);
  DoubleDouble r = detail::quick_two_sum(s.hi, s.lo + t.hi);
  return detail::quick_two_sum(r.hi, r.lo + t.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  return DoubleDouble(detail::quick_two_sum(q1, q2)) + q3;
}

struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  ComplexDD() = default;
  ComplexDD(double r) : re(r), im(0.0) {}  // NOLINT
  ComplexDD(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}
  ComplexDD(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b) { return {a.re + b.re, a.im + b.im}; }

inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexDD operator/(const ComplexDD& a, const ComplexDD& b) {
  const DoubleDouble den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

}  // namespace circle_sqm
