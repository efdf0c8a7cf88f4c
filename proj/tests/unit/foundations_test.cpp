#include <gtest/gtest.h>

#include <cmath>

#include "meixner/foundations.hpp"
#include "oracles.hpp"

using namespace meixner;

namespace {

// 30-digit values from the reflection/recursion oracle (mpmath).
struct FrozenGamma {
  Complex z;
  Complex gamma;
};
const FrozenGamma kFrozen[] = {
    {{1.0, 1.0}, {0.49801566811835604271, -0.15494982830181068512}},
    {{0.3, -2.7}, {0.028059879610273222993, 0.0094330718364571208619}},
    {{-2.5, 0.5}, {-0.3338752035224323374, -0.20645730796360841492}},
    {{-7.3, -1.1}, {-0.000022356166186932946329, -5.7161817446078269629e-6}},
};

}  // namespace

TEST(LogGamma, TrivialValues) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(log_gamma(2.0)), 0.0, 1e-15);
  const Complex half = log_gamma(0.5);
  EXPECT_NEAR(half.real(), 0.5 * std::log(kPi), 1e-15);
  EXPECT_NEAR(half.imag(), 0.0, 1e-15);
}

TEST(LogGamma, FrozenOracleValues) {
  for (const auto& f : kFrozen) {
    const Complex g = gamma(f.z);
    EXPECT_LT(std::abs(g - f.gamma) / std::abs(f.gamma), 1e-13) << f.z;
  }
  // principal log of Gamma(1+i): imaginary part already in (-pi, pi]
  const Complex lg = log_gamma({1.0, 1.0});
  EXPECT_NEAR(lg.real(), -0.65092319930185633889, 1e-14);
  EXPECT_NEAR(lg.imag(), -0.30164032046753319789, 1e-14);
}

TEST(LogGamma, LargeArgumentAgainstFrozen) {
  // log Gamma(20 + 30i) = 21.345074493863444896 + 96.714347689536180139 i (mod 2 pi i)
  const Complex lg = log_gamma({20.0, 30.0});
  EXPECT_NEAR(lg.real(), 21.345074493863444896, 1e-12);
  EXPECT_NEAR(std::remainder(lg.imag() - 96.714347689536180139, 2.0 * kPi), 0.0, 1e-12);
  EXPECT_GT(lg.imag(), -kPi);
  EXPECT_LE(lg.imag(), kPi);
}

TEST(LogGamma, AgreesWithStirlingOracleOnDisk) {
  oracle::Draws draws(11);
  for (int i = 0; i < 200; ++i) {
    const Complex z{draws.uniform(0.05, 35.0), draws.uniform(-35.0, 35.0)};
    if (std::abs(z) > 50.0) continue;
    const Complex ours = log_gamma(z);
    const Complex ref = oracle::stirling_log_gamma(z);
    EXPECT_NEAR(ours.real(), ref.real(), 1e-13 * std::max(1.0, std::abs(ref.real()) / 10.0)) << z;
    EXPECT_NEAR(std::remainder(ours.imag() - ref.imag(), 2.0 * kPi), 0.0, 1e-12) << z;
  }
}

TEST(LogGamma, RecurrenceProperty) {
  oracle::Draws draws(1);
  for (int i = 0; i < 100; ++i) {
    const Complex z{draws.uniform(0.1, 10.0), draws.uniform(-5.0, 5.0)};
    const Complex lhs = gamma(z + 1.0);
    const Complex rhs = z * gamma(z);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-12) << z;
  }
}

TEST(LogGamma, ReflectionRegionMatchesRecurrence) {
  oracle::Draws draws(2);
  for (int i = 0; i < 100; ++i) {
    const Complex z{draws.uniform(-20.0, 0.5), draws.uniform(-3.0, 3.0)};
    if (std::abs(z.imag()) < 0.05) continue;
    const Complex lhs = gamma(z + 1.0);
    const Complex rhs = z * gamma(z);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-12) << z;
  }
}

TEST(LogGamma, PoleIsDomainError) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-3.0), DomainError);
  EXPECT_NO_THROW(log_gamma(Complex(-3.0, 1e-6)));
  try {
    log_gamma(-4.0);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("-4"), std::string::npos);
  }
}

TEST(Pochhammer, PaperIdentities) {
  EXPECT_EQ(pochhammer(-3.0, 3), Complex(-6.0));
  EXPECT_EQ(pochhammer(-2.0, 3), Complex(0.0));
  EXPECT_EQ(pochhammer(5.0, 0), Complex(1.0));
  for (int n = 0; n <= 10; ++n) EXPECT_DOUBLE_EQ(pochhammer(-n, n).real(), std::pow(-1.0, n) * std::tgamma(n + 1.0));
}

TEST(Pochhammer, StepPropertyInProductRegime) {
  oracle::Draws draws(3);
  for (int i = 0; i < 50; ++i) {
    const Complex a{draws.uniform(-5.0, 5.0), draws.uniform(-5.0, 5.0)};
    for (int k = 0; k < 63; k += 7) {
      EXPECT_EQ(pochhammer(a, k + 1), pochhammer(a, k) * (a + static_cast<double>(k)));
    }
  }
}

TEST(Pochhammer, LogGammaRegimeContinuesProduct) {
  const Complex a{0.7, 1.3};
  const Complex direct = pochhammer(a, 64) * (a + 64.0) * (a + 65.0);
  const Complex via_gamma = pochhammer(a, 66);
  EXPECT_LT(std::abs(direct - via_gamma) / std::abs(direct), 1e-12);
  EXPECT_EQ(pochhammer(-70.0, 80), Complex(0.0));
}

TEST(Arcsinh, BranchConvention) {
  EXPECT_EQ(arcsinh(0.0), Complex(0.0));
  const Complex r = arcsinh(2.5);
  EXPECT_EQ(r.imag(), 0.0);
  EXPECT_NEAR(r.real(), std::asinh(2.5), 1e-15);
  const Complex q = arcsinh(0.5 * kI);
  EXPECT_NEAR(q.real(), 0.0, 1e-15);
  EXPECT_NEAR(q.imag(), kPi / 6.0, 1e-15);
}

TEST(Arcsinh, InverseAndOddness) {
  oracle::Draws draws(4);
  for (int i = 0; i < 100; ++i) {
    const Complex z{draws.uniform(-7.0, 7.0), draws.uniform(-7.0, 7.0)};
    if (std::abs(z) > 10.0) continue;
    EXPECT_LT(std::abs(std::sinh(arcsinh(z)) - z), 1e-13 * std::max(1.0, std::abs(z)));
    if (std::abs(z.real()) > 0.1) EXPECT_LT(std::abs(arcsinh(-z) + arcsinh(z)), 1e-14);
  }
}

TEST(Cpow, PrincipalBranch) {
  EXPECT_LT(std::abs(cpow(-1.0, 0.5) - kI), 1e-15);
  EXPECT_EQ(cpow(0.0, 2.0), Complex(0.0));
  EXPECT_EQ(cpow(0.0, 0.0), Complex(1.0));
  EXPECT_THROW(cpow(0.0, -1.0), DomainError);
}

TEST(AbsGammaSquared, RealAndEven) {
  EXPECT_NEAR(std::exp(log_abs_gamma_sq(1.0, 0.0)), 1.0, 1e-15);
  EXPECT_NEAR(std::exp(log_abs_gamma_sq(0.5, 0.0)), kPi, 1e-14);
  // |Gamma(1+ix)|^2 = pi x / sinh(pi x)
  for (double x : {0.3, 1.7, 12.0, 80.0}) {
    const double ref = std::log(kPi * x / std::sinh(kPi * x));
    EXPECT_NEAR(log_abs_gamma_sq(1.0, x), ref, 1e-12 * std::max(1.0, std::abs(ref)));
    EXPECT_EQ(log_abs_gamma_sq(1.0, x), log_abs_gamma_sq(1.0, -x));
  }
}
