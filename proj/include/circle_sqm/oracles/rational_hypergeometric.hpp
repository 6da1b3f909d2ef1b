#pragma once

// Exact rational evaluation of the terminating 2F1 / 1F1 series. Every double
// input is a dyadic rational, so the sums below carry no rounding at all.
// Needs gmpxx.

#include <cmath>
#include <complex>

#include <gmpxx.h>

namespace circle_sqm::oracles {

struct ComplexRational {
  mpq_class re;
  mpq_class im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexRational(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
  ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
  ComplexRational operator*(const ComplexRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexRational operator/(const ComplexRational& o) const {
    const mpq_class den = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
  }
  bool is_zero() const { return re == 0 && im == 0; }

  /// |z| in double, via the rounded components.
  double magnitude() const { return std::hypot(re.get_d(), im.get_d()); }
};

/// (-n)_j (b)_j / ((c)_j j!) x^j summed over j = 0..n, each term rebuilt from
/// its own Pochhammer products. b is skipped for the 1F1 case.
inline ComplexRational terminating_series_exact(int n, std::complex<double> b, bool with_b, std::complex<double> c,
                                                std::complex<double> x) {
  const ComplexRational bq(b), cq(c), xq(x);
  ComplexRational sum;
  for (int j = 0; j <= n; ++j) {
    ComplexRational num(mpq_class(1), mpq_class(0));
    ComplexRational den(mpq_class(1), mpq_class(0));
    for (int k = 0; k < j; ++k) {
      const ComplexRational kq(mpq_class(k), mpq_class(0));
      num = num * ComplexRational(mpq_class(k - n), mpq_class(0)) * xq;
      if (with_b) num = num * (bq + kq);
      den = den * (cq + kq) * ComplexRational(mpq_class(k + 1), mpq_class(0));
    }
    sum = sum + num / den;
  }
  return sum;
}

/// |approx - exact| / |exact| (absolute when exact is zero), computed exactly
/// before the final rounding.
inline double relative_deviation(std::complex<double> approx, const ComplexRational& exact) {
  const ComplexRational diff = ComplexRational(approx) - exact;
  if (exact.is_zero()) return diff.magnitude();
  const ComplexRational ratio = diff / exact;
  return ratio.magnitude();
}

inline double hyp2f1_deviation(int n, std::complex<double> b, std::complex<double> c, std::complex<double> x,
                               std::complex<double> approx) {
  return relative_deviation(approx, terminating_series_exact(n, b, true, c, x));
}

inline double hyp1f1_deviation(int n, std::complex<double> c, std::complex<double> y, std::complex<double> approx) {
  return relative_deviation(approx, terminating_series_exact(n, 0.0, false, c, y));
}

}  // namespace circle_sqm::oracles
