#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "circle_sqm/oracles/rational_hypergeometric.hpp"
#include "circle_sqm/specfun.hpp"

using namespace circle_sqm;

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex random_in_disc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

}  // namespace

TEST(LnGamma, SpecialValues) {
  EXPECT_NEAR(ln_gamma_complex(1.0).real(), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma_complex(1.0).imag(), 0.0, 1e-15);
  EXPECT_NEAR(ln_gamma_complex(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_NEAR(std::abs(gamma_complex({1.0, 1.0})), std::sqrt(kPi / std::sinh(kPi)), 1e-14);
  EXPECT_NEAR(std::abs(gamma_complex({1.0, 1.0})), 0.521564, 1e-6);
}

TEST(LnGamma, MatchesLibmOnRealAxis) {
  for (double x = 0.05; x < 60.0; x *= 1.37) {
    EXPECT_LT(std::abs(ln_gamma_complex(x).real() - std::lgamma(x)), 1e-13 * std::max(1.0, std::abs(std::lgamma(x))))
        << "x = " << x;
    EXPECT_NEAR(ln_gamma_complex(x).imag(), 0.0, 1e-13) << "x = " << x;
  }
  for (double x : {-0.5, -1.5, -2.25, -7.75}) {
    EXPECT_NEAR(ln_gamma_complex(x).real(), std::lgamma(x), 1e-12) << "x = " << x;
    EXPECT_NEAR(gamma_complex(x).real(), std::tgamma(x), 1e-12 * std::abs(std::tgamma(x))) << "x = " << x;
  }
}

TEST(LnGamma, ExpMatchesGammaSignOnNegativeAxis) {
  // Gamma(-1/2) = -2 sqrt(pi)
  const Complex g = gamma_complex(-0.5);
  EXPECT_NEAR(g.real(), -2.0 * std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(g.imag(), 0.0, 1e-13);
}

TEST(LnGamma, PolesAndNonFiniteInput) {
  for (double z : {0.0, -1.0, -2.0, -17.0}) {
    EXPECT_THROW(ln_gamma_complex(z), PoleError) << z;
    EXPECT_THROW(gamma_abs(z), PoleError) << z;
  }
  EXPECT_NO_THROW(ln_gamma_complex(Complex(-1.0, 1e-9)));
  EXPECT_THROW(ln_gamma_complex(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(ln_gamma_complex(Complex(1.0, std::numeric_limits<double>::infinity())), DomainError);
}

TEST(LnGamma, RecurrenceOnComplexGrid) {
  for (double x = -4.9; x <= 6.0; x += 0.37) {
    for (double y = -5.0; y <= 5.0; y += 0.83) {
      const Complex z{x, y};
      const Complex ratio = std::exp(ln_gamma_complex(z + 1.0) - ln_gamma_complex(z)) / z;
      EXPECT_LT(std::abs(ratio - 1.0), 1e-12) << "z = " << z;
    }
  }
}

TEST(LnGamma, ReflectionFormula) {
  for (double x = -2.3; x <= 2.3; x += 0.41) {
    for (double y : {-3.0, -0.4, 0.7, 2.5}) {
      const Complex z{x, y};
      const Complex lhs = gamma_complex(z) * gamma_complex(1.0 - z);
      const Complex rhs = kPi / std::sin(kPi * z);
      EXPECT_LT(std::abs(lhs / rhs - 1.0), 1e-12) << "z = " << z;
    }
  }
}

TEST(LnGamma, ConjugateSymmetry) {
  for (double y : {0.3, 2.0, 9.0}) {
    const Complex a = ln_gamma_complex({2.5, y});
    const Complex b = ln_gamma_complex({2.5, -y});
    EXPECT_NEAR(a.real(), b.real(), 1e-13);
    EXPECT_NEAR(a.imag(), -b.imag(), 1e-12);
  }
}

TEST(GammaAbs, SpecialValues) {
  EXPECT_NEAR(gamma_abs(1.0), 1.0, 1e-15);
  // |Gamma(1 + 2i)|^2 = 2 pi / sinh(2 pi)
  EXPECT_NEAR(gamma_abs({1.0, 2.0}), std::sqrt(2.0 * kPi / std::sinh(2.0 * kPi)), 1e-15);
  EXPECT_NEAR(gamma_abs({1.0, 2.0}), 0.1531896, 1e-7);
  EXPECT_NEAR(gamma_abs(0.25), 3.6256099082, 1e-10);
  EXPECT_GT(gamma_abs({0.5, 30.0}), 0.0);
}

TEST(GammaAbs, ModulusIdentityLogSpaced) {
  for (int i = 0; i < 100; ++i) {
    const double s = std::pow(10.0, -3.0 + 4.0 * i / 99.0);
    const double g = gamma_abs({1.0, s});
    EXPECT_LT(std::abs(g * g * std::sinh(kPi * s) / (kPi * s) - 1.0), 1e-12) << "sigma = " << s;
  }
}

TEST(GammaAbs, HalfLineLargeImaginaryPart) {
  // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
  for (double y : {1.0, 5.0, 20.0, 60.0}) {
    const double ln_want = 0.5 * (std::log(kPi) - (kPi * y + std::log1p(std::exp(-2.0 * kPi * y)) - std::log(2.0)));
    EXPECT_NEAR(ln_gamma_complex({0.5, y}).real(), ln_want, 1e-12 * std::max(1.0, std::abs(ln_want))) << y;
  }
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(3.7, 0), Complex(1.0));
  EXPECT_EQ(pochhammer(-3.0, 4), Complex(0.0));
  EXPECT_EQ(pochhammer(0.5, 3), Complex(1.875));
  EXPECT_THROW(pochhammer(1.0, -1), DomainError);
  EXPECT_THROW(pochhammer(std::numeric_limits<double>::infinity(), 2), DomainError);
}

TEST(Pochhammer, StepIdentityIsExact) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = 3.0 * random_in_disc(rng);
    for (int j = 0; j < 12; ++j) {
      EXPECT_EQ(pochhammer(a, j + 1), pochhammer(a, j) * (a + static_cast<double>(j)));
    }
  }
}

TEST(Hyp2F1, Examples) {
  EXPECT_EQ(hyp2f1_terminating(0, 3.0, -7.5, 100.0), Complex(1.0));
  EXPECT_NEAR(hyp2f1_terminating(1, 2.0, 4.0, 0.5).real(), 0.75, 1e-16);
  EXPECT_NEAR(hyp2f1_terminating(3, Complex(1.3, -0.4), Complex(1.3, -0.4), 0.25).real(), 0.421875, 1e-16);
}

TEST(Hyp2F1, DegenerateDenominator) {
  EXPECT_THROW(hyp2f1_terminating(3, 1.0, 0.0, 0.5), DegenerateDenominator);
  EXPECT_THROW(hyp2f1_terminating(3, 1.0, -2.0, 0.5), DegenerateDenominator);
  // (c)_j never vanishes for j < n = 3 when c = -3
  EXPECT_NO_THROW(hyp2f1_terminating(3, 1.0, -3.0, 0.5));
  EXPECT_NO_THROW(hyp2f1_terminating(0, 1.0, 0.0, 0.5));
  EXPECT_THROW(hyp2f1_terminating(-1, 1.0, 2.0, 0.5), DomainError);
}

TEST(Hyp2F1, BinomialIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 20; ++n) {
    const Complex b = 1.5 + random_in_disc(rng);
    const Complex x = random_in_disc(rng);
    const Complex want = std::pow(1.0 - x, n);
    EXPECT_LT(std::abs(hyp2f1_terminating(n, b, b, x) - want), 1e-13 * std::max(1.0, std::abs(want))) << n;
  }
}

TEST(Hyp2F1, AgreesWithExactRationalSum) {
  std::mt19937_64 rng(20240917);
  for (int n = 0; n <= 30; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const Complex b = random_in_disc(rng);
      const Complex c = random_in_disc(rng);
      const Complex x = random_in_disc(rng);
      const double dev = oracles::hyp2f1_deviation(n, b, c, x, hyp2f1_terminating(n, b, c, x));
      EXPECT_LT(dev, 1e-12) << "n=" << n << " b=" << b << " c=" << c << " x=" << x;
    }
  }
}

TEST(Hyp1F1, Examples) {
  EXPECT_EQ(hyp1f1_terminating(0, 0.3, 9.0), Complex(1.0));
  EXPECT_NEAR(hyp1f1_terminating(1, 0.5, 1.0).real(), -1.0, 1e-16);
  EXPECT_NEAR(hyp1f1_terminating(2, 2.0, 3.0).real(), -0.5, 1e-15);
  EXPECT_THROW(hyp1f1_terminating(2, -1.0, 3.0), DegenerateDenominator);
}

TEST(Hyp1F1, LaguerreRelation) {
  // L_n^{(a)}(y) = binom(n + a, n) 1F1(-n; a + 1; y); check L_2^{(a)} directly
  for (double a : {0.0, 0.5, 1.5}) {
    for (double y : {0.1, 1.0, 4.0}) {
      const double l2 = 0.5 * (y * y - 2.0 * (a + 2.0) * y + (a + 1.0) * (a + 2.0));
      const double binom = (a + 2.0) * (a + 1.0) / 2.0;
      EXPECT_NEAR(binom * hyp1f1_terminating(2, a + 1.0, y).real(), l2, 1e-13 * std::max(1.0, std::abs(l2)));
    }
  }
}

TEST(Hyp1F1, AgreesWithExactRationalSum) {
  std::mt19937_64 rng(99);
  for (int n = 0; n <= 30; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const Complex c = random_in_disc(rng);
      const Complex y = random_in_disc(rng);
      EXPECT_LT(oracles::hyp1f1_deviation(n, c, y, hyp1f1_terminating(n, c, y)), 1e-12) << n;
    }
  }
}
