#include <gtest/gtest.h>

#include <cmath>

#include "meixner/sturm_liouville.hpp"
#include "meixner/weight.hpp"

using namespace meixner;

namespace {

RealIntegrand on_axis(const StripFunction& f) {
  return [f](double x) { return f(x); };
}

StripFunction windowed_quadratic() {
  return StripFunction::entire([](Complex z) { return 1.0 + z * z * std::exp(-z * z / 16.0); });
}

StripFunction weight_ratio() {
  const MPParams lo(1.0, kPi / 2.0);
  const MPParams hi(1.5, kPi / 2.0);
  return {[=](Complex z) { return weight_analytic(hi, z) / weight_analytic(lo, z); }, 1.4};
}

}  // namespace

TEST(InnerProduct, Gaussian) {
  const auto g = gaussian_monomial(0, 1.0);
  EXPECT_NEAR(inner_product(on_axis(g), on_axis(g), {}), std::sqrt(kPi / 2.0), 1e-12);
}

TEST(InnerProduct, ParityAndBilinearity) {
  const auto even = gaussian_monomial(2, 1.0);
  const auto odd = gaussian_monomial(1, 0.7);
  EXPECT_NEAR(inner_product(on_axis(even), on_axis(odd), {}), 0.0, 1e-12);
  const auto h2 = hermite_function(2);
  const auto g = gaussian_monomial(0, 0.5);
  const double a = inner_product(on_axis(h2), on_axis(g), {});
  const double b = inner_product(on_axis(even), on_axis(g), {});
  const double combo = inner_product([&](double x) { return 3.0 * h2(x) - 2.0 * even(x); }, on_axis(g), {});
  EXPECT_NEAR(combo, 3.0 * a - 2.0 * b, 1e-12);
}

TEST(HermiteFunctions, Orthogonal) {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const double v = inner_product(on_axis(hermite_function(m)), on_axis(hermite_function(n)), {});
      const double expected = (m == n) ? std::sqrt(kPi) * std::pow(2.0, n) * std::tgamma(n + 1.0) : 0.0;
      EXPECT_NEAR(v, expected, 1e-10 * std::max(1.0, expected)) << m << " " << n;
    }
  }
  EXPECT_THROW(hermite_function(-1), std::invalid_argument);
  EXPECT_THROW(gaussian_monomial(1, 0.0), std::invalid_argument);
}

TEST(Antisymmetry, Battery) {
  const auto battery = gaussian_hermite_battery();
  ASSERT_EQ(battery.size(), 10u);
  for (const auto& pair : battery) EXPECT_LE(antisymmetry_check(pair.f, pair.g, {}), 1e-8) << pair.name;
}

TEST(Antisymmetry, ScalesQuadraticallyUnderCommonScaling) {
  // (Tf, f) = -(f, Tf) makes the residual of (cf, cf) equal c^2 times that of (f, f)
  const auto f = gaussian_monomial(1, 1.0);
  const auto cf = gaussian_monomial(1, 1.0, 3.0);
  const Complex tf_f = pairing([&](double x) { return apply_T(f, x); }, on_axis(f), {});
  const Complex tcf_cf = pairing([&](double x) { return apply_T(cf, x); }, on_axis(cf), {});
  EXPECT_LT(std::abs(tcf_cf - 9.0 * tf_f), 1e-12);
  EXPECT_LE(antisymmetry_check(cf, cf, {}), 1e-8);
}

TEST(Antisymmetry, NarrowStripRejected) {
  const StripFunction narrow{[](Complex z) { return 1.0 / (1.0 + z * z); }, 0.4};
  EXPECT_THROW(antisymmetry_check(narrow, gaussian_monomial(0, 1.0), {}), DomainError);
}

TEST(SLApply, SecondDifferenceOfBasis) {
  const SLOperator op{[](double) { return 1.0; }, StripFunction::entire([](Complex) { return Complex(1.0); })};
  const auto phi2 = StripFunction::entire([](Complex z) { return eval_basis_phi(1.0, z, 2); });
  for (double x : {-1.0, 0.0, 2.5}) EXPECT_LT(std::abs(sl_apply(op, phi2, x) + 2.0), 1e-13);
  const auto constant = StripFunction::entire([](Complex) { return Complex(4.0); });
  EXPECT_EQ(sl_apply(op, constant, 0.3), Complex(0.0));
}

TEST(SLApply, LinearInF) {
  const SLOperator op{[](double x) { return 1.0 + x * x; }, windowed_quadratic()};
  const auto f = hermite_function(2);
  const auto g = gaussian_monomial(1, 0.5);
  const auto h = StripFunction::entire([&](Complex z) { return 2.0 * f(z) - 0.5 * g(z); });
  for (double x : {-0.8, 0.4}) {
    const Complex combo = 2.0 * sl_apply(op, f, x) - 0.5 * sl_apply(op, g, x);
    EXPECT_LT(std::abs(sl_apply(op, h, x) - combo), 1e-12);
  }
  const StripFunction narrow{[](Complex z) { return z; }, 0.7};
  EXPECT_THROW(sl_apply(op, narrow, 0.0), DomainError);
}

TEST(Positivity, BatteryWithThreeCoefficients) {
  const StripFunction coefficients[] = {
      StripFunction::entire([](Complex) { return Complex(1.0); }), windowed_quadratic(), weight_ratio()};
  for (const auto& p : coefficients) {
    const SLOperator op{[](double) { return 1.0; }, p};
    for (const auto& pair : gaussian_hermite_battery()) {
      EXPECT_GE(positivity_check(op, pair.f, {}), -1e-10) << pair.name;
      EXPECT_GE(positivity_check(op, pair.g, {}), -1e-10) << pair.name;
    }
  }
}

TEST(Positivity, ScalesWithCoefficient) {
  const auto f = gaussian_monomial(0, 1.0);
  const SLOperator one{[](double) { return 1.0; }, StripFunction::entire([](Complex) { return Complex(1.0); })};
  const SLOperator two{[](double) { return 1.0; }, StripFunction::entire([](Complex) { return Complex(2.0); })};
  const double a = positivity_check(one, f, {});
  EXPECT_GT(a, 0.0);
  EXPECT_NEAR(positivity_check(two, f, {}), 2.0 * a, 1e-12);
  const auto constant = StripFunction::entire([](Complex) { return Complex(1.0); });
  EXPECT_EQ(positivity_check(one, constant, {}), 0.0);
}

TEST(SymmetryResidual, VanishesOnBattery) {
  for (const auto& p : {windowed_quadratic(), weight_ratio()}) {
    for (const auto& pair : gaussian_hermite_battery())
      EXPECT_LT(std::abs(sl_symmetry_residual(p, pair.f, pair.g, {})), 1e-8) << pair.name;
  }
}
