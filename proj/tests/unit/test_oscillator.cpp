#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "circle_sqm/numerics/quadrature.hpp"
#include "circle_sqm/numerics/residual.hpp"
#include "circle_sqm/oscillator.hpp"

using namespace circle_sqm;

namespace {

OscillatorSystem make(double omega, double k1, Branch b = Branch::Plus, double radius = 1.0) {
  return OscillatorSystem(CircleGeometry(radius), omega, k1, b);
}

double overlap(const OscillatorSystem& sys, int n, int m) {
  const auto rule = numerics::gauss_legendre(16, 20, 0.0, kHalfPi, numerics::EndpointRefinement::both());
  return sys.radius() * numerics::integrate(rule, [&](double phi) {
           return oscillator::wavefunction(sys, n, phi) * oscillator::wavefunction(sys, m, phi);
         });
}

}  // namespace

TEST(OscillatorSystem, RejectsInvalidParameters) {
  EXPECT_THROW(make(-1.0, 1.0), DomainError);
  EXPECT_THROW(make(1.0, 0.0), DomainError);
  EXPECT_THROW(make(1.0, -0.3), DomainError);
  EXPECT_THROW(make(std::nan(""), 1.0), DomainError);
  EXPECT_THROW(make(1.0, 1.0, Branch::Plus, 0.0), DomainError);
  EXPECT_THROW(make(1.0, 0.75, Branch::Minus), BranchError);
  EXPECT_NO_THROW(make(0.0, 0.5, Branch::Minus));
}

TEST(OscillatorSystem, MotionDomain) {
  EXPECT_TRUE(make(1.0, 0.75).confined_to_quadrant());
  EXPECT_EQ(make(1.0, 0.75).motion_domain().lower, 0.0);
  EXPECT_FALSE(make(1.0, 0.5).confined_to_quadrant());
  EXPECT_EQ(make(1.0, 0.5).motion_domain().lower, -kHalfPi);
}

TEST(OscillatorPotential, Examples) {
  EXPECT_NEAR(oscillator::potential(make(1.0, 0.5), kPi / 4.0), 0.5, 1e-15);
  EXPECT_NEAR(oscillator::potential(make(0.0, 1.0), kPi / 4.0), 0.75, 1e-15);
  EXPECT_NEAR(oscillator::potential(make(2.0, 1.0, Branch::Plus, 3.0), kPi / 6.0), 6.0 + 1.0 / 6.0, 1e-13);
  // the 1/sin^2 term grows toward phi = 0
  EXPECT_GT(oscillator::potential(make(0.0, 1.0), 1e-3), oscillator::potential(make(0.0, 1.0), kPi / 4.0));
}

TEST(OscillatorPotential, SingularPoints) {
  const auto sys = make(1.0, 1.0);
  for (double phi : {0.0, kHalfPi, -kHalfPi, kPi}) {
    EXPECT_THROW(oscillator::potential(sys, phi), SingularPointError) << phi;
  }
}

TEST(PoschlTellerReduction, Examples) {
  const auto a = oscillator::reduce_to_poschl_teller(make(0.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(a.epsilon, 4.0);
  EXPECT_DOUBLE_EQ(a.k0, 0.5);
  EXPECT_DOUBLE_EQ(a.k1, 1.0);
  const auto b = oscillator::reduce_to_poschl_teller(make(1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(b.epsilon, 1.0);
  EXPECT_NEAR(b.k0, 1.1180340, 1e-7);
  for (double e : {-3.0, 0.0, 0.25, 17.5}) {
    const auto sys = make(1.3, 0.8, Branch::Plus, 2.0);
    EXPECT_NEAR(oscillator::energy_from_epsilon(sys, oscillator::reduce_to_poschl_teller(sys, e).epsilon), e,
                1e-13 * std::max(1.0, std::abs(e)));
  }
}

TEST(EnergyEpsilon, Examples) {
  EXPECT_DOUBLE_EQ(oscillator::energy_epsilon(0, 0.5, 1.0, Branch::Plus), 6.25);
  EXPECT_NEAR(oscillator::energy_epsilon(2, std::sqrt(5.0) / 2.0, 0.25, Branch::Minus), 34.433, 1e-3);
  EXPECT_DOUBLE_EQ(oscillator::energy_epsilon(1, 0.5, 0.5, Branch::Plus), 16.0);
  EXPECT_DOUBLE_EQ(oscillator::energy_epsilon(1, 0.5, 0.5, Branch::Minus), 9.0);
  EXPECT_THROW(oscillator::energy_epsilon(0, 0.5, 0.75, Branch::Minus), BranchError);
  EXPECT_THROW(oscillator::energy_epsilon(-1, 0.5, 0.75, Branch::Plus), DomainError);
}

TEST(EnergyLevel, Examples) {
  EXPECT_DOUBLE_EQ(oscillator::energy_level(make(0.0, 1.0), 0), 3.125);
  EXPECT_NEAR(oscillator::energy_level(make(1.0, 1.0), 0), 4.3611, 1e-4);
  EXPECT_THROW(oscillator::energy_level(make(1.0, 1.0), -1), DomainError);
}

TEST(EnergyLevel, StrictlyIncreasingInN) {
  for (double k1 : {0.25, 0.5, 1.5}) {
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      if (!branch_admissible(b, k1)) continue;
      const auto sys = make(0.7, k1, b, 1.7);
      for (int n = 0; n < 30; ++n) {
        EXPECT_LT(oscillator::energy_level(sys, n), oscillator::energy_level(sys, n + 1));
      }
    }
  }
}

TEST(EnergyLevel, EpsilonRouteAgrees) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> omega(0.0, 5.0), radius(0.1, 10.0), k1(1e-6, 5.0);
  std::uniform_int_distribution<int> level(0, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    const double kk = k1(rng);
    const Branch b = (kk <= 0.5 && trial % 2) ? Branch::Minus : Branch::Plus;
    const auto sys = make(omega(rng), kk, b, radius(rng));
    const int n = level(rng);
    const double direct = oscillator::energy_level(sys, n);
    const double via = oscillator::energy_from_epsilon(sys, oscillator::energy_epsilon(n, sys.k0(), kk, b));
    EXPECT_LE(std::abs(direct - via), 1e-12 * std::abs(direct)) << "trial " << trial;
  }
}

TEST(OscillatorWavefunction, VanishesAtEndpointsAndIsPositiveForGroundState) {
  for (double k1 : {0.25, 0.5, 0.75, 1.5}) {
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      if (!branch_admissible(b, k1)) continue;
      const auto sys = make(1.0, k1, b);
      if (0.5 + sign_of(b) * k1 > 0.0) {
        EXPECT_LT(std::abs(oscillator::wavefunction(sys, 0, 1e-10)), 1e-2);
      } else {
        // k1 = 1/2, minus: exponent 0, the even state is regular and nonzero at phi = 0
        EXPECT_GT(oscillator::wavefunction(sys, 0, 1e-10), 0.1);
      }
      EXPECT_LT(std::abs(oscillator::wavefunction(sys, 0, kHalfPi - 1e-10)), 1e-8);
      for (double phi = 0.01; phi < kHalfPi; phi += 0.05) {
        EXPECT_GT(oscillator::wavefunction(sys, 0, phi), 0.0);
      }
    }
  }
}

TEST(OscillatorWavefunction, DomainChecks) {
  const auto confined = make(1.0, 0.75);
  EXPECT_THROW(oscillator::wavefunction(confined, 0, 0.0), DomainError);
  EXPECT_THROW(oscillator::wavefunction(confined, 0, -0.1), DomainError);
  EXPECT_THROW(oscillator::wavefunction(confined, 0, kHalfPi), DomainError);
  EXPECT_THROW(oscillator::wavefunction(confined, -1, 0.3), DomainError);
  EXPECT_NO_THROW(oscillator::wavefunction(make(1.0, 0.5), 0, -0.3));
}

TEST(OscillatorWavefunction, ParityOnExtendedDomain) {
  const auto plus = make(1.0, 0.25, Branch::Plus);
  const auto minus = make(1.0, 0.25, Branch::Minus);
  for (int n = 0; n <= 3; ++n) {
    for (double phi : {0.1, 0.7, 1.3}) {
      EXPECT_DOUBLE_EQ(oscillator::wavefunction(plus, n, -phi), -oscillator::wavefunction(plus, n, phi));
      EXPECT_DOUBLE_EQ(oscillator::wavefunction(minus, n, -phi), oscillator::wavefunction(minus, n, phi));
    }
  }
}

TEST(OscillatorWavefunction, NormalizedAndOrthogonal) {
  for (double k1 : {0.25, 0.5, 1.5, 3.0}) {
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      if (!branch_admissible(b, k1)) continue;
      const auto sys = make(1.2, k1, b, 0.8);
      for (int n = 0; n <= 5; ++n) {
        EXPECT_NEAR(overlap(sys, n, n), 1.0, 1e-8) << "k1=" << k1 << " n=" << n;
        for (int m = 0; m < n; ++m) {
          EXPECT_NEAR(overlap(sys, n, m), 0.0, 1e-8) << "k1=" << k1 << " n=" << n << " m=" << m;
        }
      }
    }
  }
}

TEST(OscillatorWavefunction, MinusBranchNeedsSignedGammaArgument) {
  // Using Gamma(n + k0 + k1 + 1) for both branches fails to normalize the
  // minus family; the signed argument Gamma(n + k0 - k1 + 1) is what works.
  const auto sys = make(1.0, 0.5, Branch::Minus);
  const double k0 = sys.k0();
  for (int n = 0; n <= 2; ++n) {
    const double unsigned_factor =
        std::exp(std::lgamma(n + k0 + 0.5 + 1.0) - std::lgamma(n + k0 - 0.5 + 1.0));
    EXPECT_NEAR(overlap(sys, n, n), 1.0, 1e-8);
    EXPECT_GT(std::abs(unsigned_factor * overlap(sys, n, n) - 1.0), 0.1) << n;
  }
}

TEST(OscillatorWavefunction, NodeCount) {
  for (double k1 : {0.25, 1.5}) {
    const auto sys = make(0.9, k1);
    for (int n = 0; n <= 6; ++n) {
      int changes = 0;
      double prev = oscillator::wavefunction(sys, n, 1e-4);
      for (int i = 1; i <= 4000; ++i) {
        const double phi = 1e-4 + i * (kHalfPi - 2e-4) / 4000.0;
        const double v = oscillator::wavefunction(sys, n, phi);
        if ((v > 0) != (prev > 0)) ++changes;
        prev = v;
      }
      EXPECT_EQ(changes, n) << "k1=" << k1;
    }
  }
}

TEST(OscillatorWavefunction, SatisfiesReducedEquation) {
  for (double k1 : {0.25, 1.5}) {
    for (int n : {0, 2, 5}) {
      const auto sys = make(1.0, k1);
      const double eps = oscillator::energy_epsilon(n, sys.k0(), k1, Branch::Plus);
      const auto psi = [&](double phi) { return oscillator::wavefunction(sys, n, phi); };
      const auto bracket = numerics::poschl_teller_bracket({eps, sys.k0(), k1});
      const auto coarse = numerics::ode_residual(psi, bracket, {0.0, kHalfPi}, 64, 0.05, 1);
      const auto fine = numerics::ode_residual(psi, bracket, {0.0, kHalfPi}, 64, 0.05, 2);
      EXPECT_NEAR(coarse.max_residual / fine.max_residual, 4.0, 0.4) << "k1=" << k1 << " n=" << n;
    }
  }
}

TEST(OscillatorSpectrum, BranchSelection) {
  for (const auto& e : oscillator::spectrum(make(1.0, 0.75), 4)) {
    EXPECT_EQ(e.branch, Branch::Plus);
  }
  const auto sys = make(0.0, 0.5);
  const auto levels = oscillator::spectrum(sys, 1);
  ASSERT_EQ(levels.size(), 4u);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    EXPECT_EQ(levels[i].energy, oscillator::energy_level(sys.with_branch(levels[i].branch), levels[i].n));
    if (i) {
      EXPECT_LE(levels[i - 1].energy, levels[i].energy);
    }
  }
  EXPECT_EQ(levels.front().branch, Branch::Minus);
  EXPECT_THROW(oscillator::spectrum(sys, -1), DomainError);
}

TEST(OscillatorSpectrum, MergedListStrictlyIncreasingOffDegeneracy) {
  for (double k1 : {0.1, 0.3, 0.45}) {
    for (double omega : {0.3, 1.0, 2.2}) {
      const auto levels = oscillator::spectrum(make(omega, k1), 8);
      for (std::size_t i = 1; i < levels.size(); ++i) EXPECT_LT(levels[i - 1].energy, levels[i].energy);
    }
  }
}
