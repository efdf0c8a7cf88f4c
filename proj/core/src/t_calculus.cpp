#include "meixner/t_calculus.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "meixner/weight.hpp"

namespace meixner {

namespace {

void check_strip(const StripFunction& f, Complex x, int shifts) {
  const double reach = std::abs(x.imag()) + 0.5 * shifts;
  if (reach > f.strip_halfwidth + 1e-12) {
    std::ostringstream msg;
    msg << "T-operator: evaluation reaches |Im z| = " << reach
        << " beyond strip half-width " << f.strip_halfwidth;
    throw DomainError(msg.str());
  }
}

}  // namespace

Complex apply_T(const StripFunction& f, Complex x) {
  check_strip(f, x, 1);
  return (f(x + 0.5 * kI) - f(x - 0.5 * kI)) / kI;
}

Complex apply_T_power(const StripFunction& f, Complex x, int k) {
  if (k < 0) throw std::invalid_argument("apply_T_power: negative power");
  if (k == 0) return f(x);
  check_strip(f, x, k);
  Complex sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const Complex shift = x + kI * (0.5 * (k - 2 * j));
    sum += ((j % 2 == 0) ? binom : -binom) * f(shift);
    binom = binom * (k - j) / (j + 1);
  }
  Complex mi_k = 1.0;
  for (int j = 0; j < k; ++j) mi_k *= -kI;
  return mi_k * sum;
}

StripFunction T_of(StripFunction f) {
  const double width = f.strip_halfwidth - 0.5;
  if (width < 0.0) throw DomainError("T_of: strip too narrow for one T application");
  auto shared = std::make_shared<StripFunction>(std::move(f));
  return {[shared](Complex z) { return apply_T(*shared, z); }, width};
}

IdentitySides lowering_pair(const MPParams& params, Complex x, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("lowering_pair: need 1 <= k <= n");
  const auto poly = StripFunction::entire([&](Complex z) { return mp_value(params, z, n); });
  const Complex lhs = apply_T_power(poly, x, k);
  const Complex rhs =
      std::pow(2.0 * std::sin(params.phi()), k) * mp_value(params.shifted(0.5 * k), x, n - k);
  return {lhs, rhs};
}

IdentitySides raising_pair(const MPParams& params, Complex x, int n) {
  if (!(params.lambda() > 0.5)) throw std::invalid_argument("raising_pair: need lambda > 1/2");
  if (n < 0) throw std::invalid_argument("raising_pair: negative degree");
  const MPParams lower = params.shifted(-0.5);
  const StripFunction weighted{
      [&](Complex z) { return weight_analytic(params, z) * mp_value(params, z, n); },
      params.lambda()};
  const Complex lhs = apply_T(weighted, x);
  const Complex rhs = -(n + 1.0) * weight_analytic(lower, x) * mp_value(lower, x, n + 1);
  return {lhs, rhs};
}

}  // namespace meixner
