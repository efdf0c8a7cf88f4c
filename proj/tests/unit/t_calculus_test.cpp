#include <gtest/gtest.h>

#include <cmath>

#include "meixner/t_calculus.hpp"
#include "meixner/weight.hpp"
#include "oracles.hpp"

using namespace meixner;

TEST(ApplyT, ConstantAndLinear) {
  const auto one = StripFunction::entire([](Complex) { return Complex(1.0); });
  const auto id = StripFunction::entire([](Complex z) { return z; });
  EXPECT_EQ(apply_T(one, 0.7), Complex(0.0));
  EXPECT_LT(std::abs(apply_T(id, 0.7) - 1.0), 1e-15);
  EXPECT_LT(std::abs(apply_T(id, Complex(2.0, 3.0)) - 1.0), 1e-15);
}

TEST(ApplyT, BasisPhiLowering) {
  // T phi_n^{(lambda)} = i n phi_{n-1}^{(lambda)}
  oracle::Draws draws(21);
  for (int i = 0; i < 20; ++i) {
    const double l = draws.uniform(0.2, 3.0);
    const Complex x{draws.uniform(-4.0, 4.0), draws.uniform(-0.5, 0.5)};
    for (int n = 1; n <= 8; ++n) {
      const auto f = StripFunction::entire([=](Complex z) { return eval_basis_phi(l, z, n); });
      const Complex expected = kI * static_cast<double>(n) * eval_basis_phi(l, x, n - 1);
      EXPECT_LT(std::abs(apply_T(f, x) - expected), 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(ApplyTPower, MatchesIteratedT) {
  const auto f = StripFunction::entire([](Complex z) { return std::exp(-z * z) * (1.0 + z); });
  StripFunction g = f;
  for (int k = 1; k <= 4; ++k) {
    g = T_of(g);
    for (double x : {-1.3, 0.0, 0.4, 2.2}) {
      const Complex a = apply_T_power(f, x, k);
      const Complex b = g(x);
      EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a))) << "k=" << k << " x=" << x;
    }
  }
  EXPECT_EQ(apply_T_power(f, 0.4, 0), f(0.4));
  EXPECT_THROW(apply_T_power(f, 0.4, -1), std::invalid_argument);
}

TEST(ApplyTPower, SecondPowerOfBasisPhi) {
  // T^2 phi_2 = (i 2)(i 1) phi_0 = -2
  const auto f = StripFunction::entire([](Complex z) { return eval_basis_phi(1.4, z, 2); });
  for (double x : {-2.0, 0.0, 0.9}) EXPECT_LT(std::abs(apply_T_power(f, x, 2) + 2.0), 1e-13);
}

TEST(StripContract, ViolationThrows) {
  const StripFunction narrow{[](Complex z) { return 1.0 / (z * z + 1.0); }, 0.9};
  EXPECT_NO_THROW(apply_T(narrow, 0.3));
  EXPECT_NO_THROW(apply_T(narrow, Complex(0.3, 0.35)));
  EXPECT_THROW(apply_T(narrow, Complex(0.3, 0.5)), DomainError);
  EXPECT_THROW(apply_T_power(narrow, 0.0, 2), DomainError);
  const StripFunction t1 = T_of(narrow);
  EXPECT_NEAR(t1.strip_halfwidth, 0.4, 1e-15);
  EXPECT_THROW(T_of(t1), DomainError);
}

TEST(Lowering, FrozenSecondDifference) {
  // T^2 P_3 at lambda = 1.3, phi = 0.9 equals (2 sin phi)^2 P_1^{(2.3)}
  const MPParams p(1.3, 0.9);
  const IdentitySides s = lowering_pair(p, 0.7, 3, 2);
  const double expected = std::pow(2.0 * std::sin(0.9), 2) * (2.0 * 2.3 * std::cos(0.9) + 1.4 * std::sin(0.9));
  EXPECT_NEAR(s.rhs.real(), expected, 1e-13);
  EXPECT_LT(s.rel_error(), 1e-12);
}

TEST(Lowering, GridProperty) {
  oracle::Draws draws(22);
  for (double l : {0.5, 1.0, 2.3}) {
    for (double phi : {kPi / 4.0, kPi / 2.0, 2.0}) {
      const MPParams p(l, phi);
      for (int i = 0; i < 3; ++i) {
        const double x = draws.uniform(-5.0, 5.0);
        for (int n = 1; n <= 10; ++n)
          for (int k = 1; k <= std::min(3, n); ++k)
            EXPECT_LT(lowering_pair(p, x, n, k).rel_error(), 1e-9) << l << " " << phi << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Lowering, RangeChecks) {
  const MPParams p(1.0, 1.0);
  EXPECT_THROW(lowering_pair(p, 0.0, 2, 3), std::invalid_argument);
  EXPECT_THROW(lowering_pair(p, 0.0, 2, 0), std::invalid_argument);
}

TEST(Raising, FrozenValue) {
  // lambda = 1, phi = pi/2, x = 0.3, n = 0; both sides -1.2753448689087358137
  const IdentitySides s = raising_pair(MPParams(1.0, kPi / 2.0), 0.3, 0);
  EXPECT_NEAR(s.lhs.real(), -1.2753448689087358137, 1e-13);
  EXPECT_NEAR(s.rhs.real(), -1.2753448689087358137, 1e-13);
  EXPECT_NEAR(s.lhs.imag(), 0.0, 1e-13);
}

TEST(Raising, GridProperty) {
  oracle::Draws draws(23);
  for (double l : {1.0, 2.3, 0.8}) {
    for (double phi : {kPi / 4.0, kPi / 2.0, 2.0}) {
      const MPParams p(l, phi);
      for (int i = 0; i < 3; ++i) {
        const double x = draws.uniform(-4.0, 4.0);
        for (int n = 0; n <= 10; ++n)
          EXPECT_LT(raising_pair(p, x, n).rel_error(), 1e-9) << l << " " << phi << " n=" << n;
      }
    }
  }
}

TEST(Raising, NeedsLambdaAboveHalf) {
  EXPECT_THROW(raising_pair(MPParams(0.5, 1.0), 0.0, 1), std::invalid_argument);
  EXPECT_THROW(raising_pair(MPParams(0.3, 1.0), 0.0, 1), std::invalid_argument);
}
