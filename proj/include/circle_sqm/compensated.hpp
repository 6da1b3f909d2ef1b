#pragma once

#include <cmath>
#include <complex>

namespace circle_sqm {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct CompensatedValue {
  double hi = 0.0;
  double lo = 0.0;

  double value() const { return hi + lo; }
};

/// Knuth's error-free transformation: a + b == s.hi + s.lo exactly.
inline CompensatedValue two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Neumaier's variant of Kahan summation.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace circle_sqm
