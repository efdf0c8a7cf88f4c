#include "meixner/plane_wave.hpp"

#include <cmath>
#include <stdexcept>

namespace meixner {

namespace {

void check_branch(Complex t) {
  if (std::abs(t - 2.0 * kI) < 1e-14 || std::abs(t + 2.0 * kI) < 1e-14)
    throw DomainError("T-exponential: t at a branch point of arcsinh(t/2)");
}

}  // namespace

Complex e_closed(Complex x, Complex t) {
  check_branch(t);
  return std::exp(2.0 * kI * x * arcsinh(0.5 * t));
}

Complex g_normalizer(double lambda, Complex t) {
  const Complex root = std::sqrt(1.0 + 0.25 * t * t);
  return root * cpow(0.5 * t + root, -2.0 * lambda);
}

Complex e_series(double lambda, Complex x, Complex t, int N) {
  if (N < 0) throw std::invalid_argument("e_series: negative truncation order");
  Complex sum = 1.0;
  for (int n = 1; n <= N; ++n) {
    const Complex a = lambda + 0.5 * (1 - n) + kI * x;
    Complex term = 1.0;
    for (int j = 0; j < n; ++j) term *= (a + static_cast<double>(j)) * t / static_cast<double>(j + 1);
    sum += term;
  }
  return g_normalizer(lambda, t) * sum;
}

TrigPair c_and_s(Complex x, Complex t) {
  check_branch(t);
  const Complex arg = 2.0 * x * arcsinh(0.5 * t);
  return {std::cos(arg), std::sin(arg)};
}

namespace {

Complex sine_ratio(const MPParams& params, Complex t) {
  const double s = std::sin(params.phi());
  const Complex denom = std::sin(params.phi() + kI * arcsinh(0.5 * t));
  if (std::abs(denom) < 1e-300) throw DomainError("expansion_coeff: sin(phi + i arcsinh(t/2)) = 0");
  return s / denom;
}

}  // namespace

Complex expansion_ratio(const MPParams& params, Complex t) {
  return kI * t / (2.0 * std::sin(params.phi())) * sine_ratio(params, t);
}

Complex expansion_coeff(const MPParams& params, Complex t, int n) {
  if (n < 0) throw std::invalid_argument("expansion_coeff: negative index");
  const Complex ratio = sine_ratio(params, t);
  const Complex step = kI * t / (2.0 * std::sin(params.phi()));
  Complex lead = 1.0;
  for (int k = 0; k < n; ++k) lead *= step;
  return lead * cpow(ratio, 2.0 * params.lambda() + n);
}

ExpansionCoeffs expansion_coeffs(const MPParams& params, Complex t, int N) {
  if (N < 0) throw std::invalid_argument("expansion_coeffs: negative N");
  ExpansionCoeffs out{t, params.lambda(), params.phi(), {}};
  out.coeffs.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.coeffs.push_back(expansion_coeff(params, t, n));
  return out;
}

Complex plane_wave_partial(const MPParams& params, Complex x, Complex t, int N) {
  const ExpansionCoeffs g = expansion_coeffs(params, t, N);
  const PolySequence p = eval_recurrence(params, x, N);
  Complex sum = 0.0;
  for (int n = 0; n <= N; ++n) sum += g.coeffs[static_cast<std::size_t>(n)] * p[n];
  return sum;
}

}  // namespace meixner
