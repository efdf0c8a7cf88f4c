#include "meixner/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meixner/quadrature.hpp"
#include "meixner/weight.hpp"

namespace meixner {

namespace {

// log of (a)_n / n!, any branch.
Complex log_rising_over_factorial(Complex a, int n) {
  return log_gamma(a + static_cast<double>(n)) - log_gamma(a) - std::lgamma(n + 1.0);
}

struct DarbouxLogTerms {
  Complex first;   // log of the e^{-in phi} term
  Complex second;  // log of the e^{+in phi} term
};

DarbouxLogTerms darboux_log_terms(const MPParams& params, Complex x, int n) {
  const double l = params.lambda();
  const double phi = params.phi();
  const Complex a = l + kI * x;
  const Complex b = l - kI * x;
  const Complex first = log_rising_over_factorial(a, n) - kI * (n * phi) +
                        (-l + kI * x) * std::log(1.0 - std::exp(2.0 * kI * phi));
  const Complex second = log_rising_over_factorial(b, n) + kI * (n * phi) +
                         (-l - kI * x) * std::log(1.0 - std::exp(-2.0 * kI * phi));
  return {first, second};
}

Complex log_poly(const PolySequence& p, int n) { return {p.log_abs(n), p.arg(n)}; }

}  // namespace

double RecursionSolution::max_residual() const {
  const double l = params.lambda();
  const double s = std::sin(params.phi());
  const double c = std::cos(params.phi());
  double worst = 0.0;
  for (int n = 1; n < values.degree_max(); ++n) {
    const Complex a = 2.0 * (x * s + (n + l) * c) * values[n];
    const Complex b = (n + 1.0) * values[n + 1];
    const Complex d = (n + 2.0 * l - 1.0) * values[n - 1];
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(d), 1e-300});
    worst = std::max(worst, std::abs(a - b - d) / scale);
  }
  return worst;
}

RecursionSolution general_solution(const MPParams& params, Complex x, Complex y0, Complex y1, int N) {
  if (N < 1) throw std::invalid_argument("general_solution: need N >= 1");
  return {params, x, y0, y1, solve_recurrence(params.lambda(), params.phi(), x, y0, y1, N)};
}

IdentitySides gf_identity_check(const MPParams& params, Complex x, Complex y0, Complex y1, Complex t,
                                int N) {
  if (std::abs(t) > 0.3 + 1e-15) throw std::invalid_argument("gf_identity_check: need |t| <= 0.3");
  const double l = params.lambda();
  const double phi = params.phi();
  const Complex ep = std::exp(kI * phi);
  const Complex em = std::exp(-kI * phi);

  const PolySequence y = solve_recurrence(l, phi, x, y0, y1, N);
  Complex series = 0.0;
  Complex tn = 1.0;
  for (int n = 0; n <= N; ++n) {
    series += y[n] * tn;
    tn *= t;
  }
  const Complex lhs = cpow(1.0 - t * ep, l - kI * x) * cpow(1.0 - t * em, l + kI * x) * series;

  const Complex c = y1 - 2.0 * x * std::sin(phi) * y0 - 2.0 * l * std::cos(phi) * y0;
  const Complex integral = integrate_segment(
      [&](Complex u) {
        return cpow(1.0 - u * ep, l - kI * x - 1.0) * cpow(1.0 - u * em, l + kI * x - 1.0);
      },
      0.0, t, 64);
  return {lhs, y0 + c * integral};
}

Complex darboux_P(const MPParams& params, Complex x, int n) {
  const DarbouxLogTerms t = darboux_log_terms(params, x, n);
  return std::exp(t.first) + std::exp(t.second);
}

Complex darboux_dominant(const MPParams& params, Complex x, int n) {
  const double l = params.lambda();
  const double phi = params.phi();
  const Complex b = l - kI * x;
  return std::exp((b - 1.0) * std::log(static_cast<double>(n)) - log_gamma(b) + kI * (n * phi) +
                  (-l - kI * x) * std::log(1.0 - std::exp(-2.0 * kI * phi)));
}

double darboux_deviation(const MPParams& params, Complex x, int n) {
  if (n < 1) throw std::invalid_argument("darboux_deviation: need n >= 1");
  const PolySequence p = eval_recurrence(params, x, n);
  const DarbouxLogTerms t = darboux_log_terms(params, x, n);
  const double ref = std::max(t.first.real(), t.second.real());
  const Complex shift{ref, 0.0};
  const Complex pn = std::exp(log_poly(p, n) - shift);
  const Complex a = std::exp(t.first - shift);
  const Complex b = std::exp(t.second - shift);
  return std::abs(pn - a - b) / (std::abs(a) + std::abs(b));
}

double darboux_envelope(const MPParams& params, Complex x, int n) {
  if (n < 1) throw std::invalid_argument("darboux_envelope: need n >= 1");
  const int last = n + n / 4;
  const PolySequence p = eval_recurrence(params, x, last);
  double worst = 0.0;
  for (int m = n; m <= last; ++m) {
    const DarbouxLogTerms t = darboux_log_terms(params, x, m);
    const Complex shift{std::max(t.first.real(), t.second.real()), 0.0};
    const Complex pm = std::exp(log_poly(p, m) - shift);
    const Complex a = std::exp(t.first - shift);
    const Complex b = std::exp(t.second - shift);
    worst = std::max(worst, std::abs(pm - a - b) / (std::abs(a) + std::abs(b)));
  }
  return worst;
}

double darboux_dominant_deviation(const MPParams& params, Complex x, int n) {
  if (n < 1) throw std::invalid_argument("darboux_dominant_deviation: need n >= 1");
  const double l = params.lambda();
  const double phi = params.phi();
  const Complex b = l - kI * x;
  const Complex log_d = (b - 1.0) * std::log(static_cast<double>(n)) - log_gamma(b) + kI * (n * phi) +
                        (-l - kI * x) * std::log(1.0 - std::exp(-2.0 * kI * phi));
  const PolySequence p = eval_recurrence(params, x, n);
  return std::abs(std::exp(log_poly(p, n) - log_d) - 1.0);
}

double l2_divergence_witness(const MPParams& params, double x, int N) {
  if (N < 0) throw std::invalid_argument("l2_divergence_witness: negative N");
  const PolySequence p = eval_recurrence(params, x, N);
  const double l = params.lambda();
  const double log_scale = std::log(2.0 * kPi) - 2.0 * l * std::log(2.0 * std::sin(params.phi()));
  double sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double log_h = log_scale + std::lgamma(n + 2.0 * l) - std::lgamma(n + 1.0);
    sum += std::exp(2.0 * p.log_abs(n) - log_h);
  }
  return sum;
}

}  // namespace meixner
