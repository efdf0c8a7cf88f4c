#include "meixner/weight.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "meixner/plane_wave.hpp"

namespace meixner {

namespace {

constexpr double kMaxHalfWidth = 1.0e4;
constexpr double kMinLogDouble = -745.0;

// Smallest X > 0 with log_f(+-x) below `threshold` for all |x| >= X,
// assuming eventual monotone decay; 20% margin.
double scan_decay(const std::function<double(double)>& log_f, double threshold) {
  double edge = 1.0;
  for (const double sign : {-1.0, 1.0}) {
    double x = 1.0;
    while (x < kMaxHalfWidth && log_f(sign * x) > threshold) x += 0.25;
    edge = std::max(edge, x);
  }
  return std::min(1.2 * edge, kMaxHalfWidth);
}

}  // namespace

double log_weight(const MPParams& params, double x) {
  return (2.0 * params.phi() - kPi) * x + log_abs_gamma_sq(params.lambda(), x);
}

WeightSample weight_sample(const MPParams& params, double x) {
  const double lw = log_weight(params, x);
  if (lw < kMinLogDouble) return {0.0, true};
  return {std::exp(lw), false};
}

double weight(const MPParams& params, double x) { return weight_sample(params, x).value; }

Complex weight_analytic(const MPParams& params, Complex z) {
  const double l = params.lambda();
  const Complex a = l + kI * z;
  const Complex b = l - kI * z;
  if (is_gamma_pole(a) || is_gamma_pole(b))
    throw DomainError("weight_analytic: Gamma pole at lambda +- iz");
  return std::exp((2.0 * params.phi() - kPi) * z + log_gamma(a) + log_gamma(b));
}

double orthogonality_norm(const MPParams& params, int n) {
  const double l = params.lambda();
  const double log_h = std::log(2.0 * kPi) + std::lgamma(n + 2.0 * l) -
                       2.0 * l * std::log(2.0 * std::sin(params.phi())) - std::lgamma(n + 1.0);
  return std::exp(log_h);
}

double choose_half_width(const MPParams& params, int poly_degree, double tol) {
  const double threshold = std::log(tol) - 5.0 + std::min(0.0, log_weight(params, 0.0));
  return scan_decay(
      [&](double x) {
        return log_weight(params, x) + poly_degree * std::log(2.0 * (1.0 + std::abs(x)));
      },
      threshold);
}

QuadratureResult integrate_weighted(const MPParams& params, const RealIntegrand& integrand,
                                    const QuadratureScheme& scheme, int poly_degree,
                                    std::span<const FocusPoint> focus) {
  scheme.validate();
  const double X = scheme.half_width > 0.0 ? scheme.half_width
                                            : choose_half_width(params, poly_degree, scheme.tol);
  return integrate_interval(
      [&](double x) {
        const WeightSample w = weight_sample(params, x);
        return w.underflow ? Complex{0.0} : integrand(x) * w.value;
      },
      -X, X, scheme, focus);
}

double GramMatrix::max_offdiag() const {
  double m = 0.0;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      if (i != j) m = std::max(m, std::abs(at(i, j)));
  return m;
}

double GramMatrix::max_diag_deviation() const {
  double m = 0.0;
  for (int i = 0; i <= N; ++i) m = std::max(m, std::abs(at(i, i) - 1.0));
  return m;
}

GramMatrix orthogonality_matrix(const MPParams& params, int N, const QuadratureScheme& scheme) {
  if (N < 0 || N > 25) throw std::invalid_argument("orthogonality_matrix: need 0 <= N <= 25");
  scheme.validate();
  const double X = scheme.half_width > 0.0 ? scheme.half_width
                                            : choose_half_width(params, 2 * N, scheme.tol);
  const GaussLegendreRule rule = gauss_legendre(scheme.nodes_per_panel);
  const auto dim = static_cast<std::size_t>(N + 1);

  std::vector<double> norm(dim);
  for (int n = 0; n <= N; ++n) norm[static_cast<std::size_t>(n)] = std::sqrt(orthogonality_norm(params, n));

  auto assemble = [&](int panels) {
    std::vector<double> g(dim * dim, 0.0);
    const double h = 2.0 * X / panels;
    std::vector<double> p(dim);
    for (int q = 0; q < panels; ++q) {
      const double mid = -X + (q + 0.5) * h;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double x = mid + 0.5 * h * rule.nodes[j];
        const WeightSample w = weight_sample(params, x);
        if (w.underflow) continue;
        const PolySequence seq = eval_recurrence(params, x, N);
        for (std::size_t n = 0; n < dim; ++n) p[n] = seq[static_cast<int>(n)].real() / norm[n];
        const double wt = 0.5 * h * rule.weights[j] * w.value;
        for (std::size_t m = 0; m < dim; ++m)
          for (std::size_t n = m; n < dim; ++n) g[m * dim + n] += wt * p[m] * p[n];
      }
    }
    for (std::size_t m = 0; m < dim; ++m)
      for (std::size_t n = 0; n < m; ++n) g[m * dim + n] = g[n * dim + m];
    return g;
  };

  int panels = scheme.panels;
  std::vector<double> coarse = assemble(panels);
  for (int level = 0; level <= scheme.max_doublings; ++level) {
    panels *= 2;
    std::vector<double> fine = assemble(panels);
    double err = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) err = std::max(err, std::abs(fine[i] - coarse[i]));
    if (err <= scheme.tol) return {N, std::move(fine), err};
    coarse = std::move(fine);
  }
  throw ConvergenceError("orthogonality_matrix: panel refinement stalled");
}

double normalized_weight(const MPParams& params, double x) {
  return weight(params, x) / orthogonality_norm(params, 0);
}

IdentitySides sec_integral_check(double lambda, Complex z, const QuadratureScheme& scheme) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sec_integral_check: lambda must be > 0");
  if (!(std::abs(z.real()) < kPi / 2.0))
    throw std::invalid_argument("sec_integral_check: need |Re z| < pi/2");
  scheme.validate();
  const Complex lhs = cpow(1.0 / std::cos(z), lambda);

  auto log_kernel = [&](double t) { return z.real() * t + log_abs_gamma_sq(0.5 * lambda, 0.5 * t); };
  const double X = scheme.half_width > 0.0
                       ? scheme.half_width
                       : scan_decay(log_kernel, std::log(scheme.tol) - 5.0 + std::min(0.0, log_kernel(0.0)));
  const QuadratureResult r = integrate_interval(
      [&](double t) {
        return std::exp(z * t + log_abs_gamma_sq(0.5 * lambda, 0.5 * t));
      },
      -X, X, scheme);
  const double pref = std::pow(2.0, lambda - 2.0) / (kPi * std::tgamma(lambda));
  return {lhs, pref * r.value};
}

ExpansionCoeffCheck g01_check(const MPParams& params, double t, const QuadratureScheme& scheme) {
  if (std::abs(t) > 0.5) throw std::invalid_argument("g01_check: need |t| <= 1/2");
  const double h0 = orthogonality_norm(params, 0);
  const double l = params.lambda();
  const double phi = params.phi();
  const QuadratureResult q0 = integrate_weighted(
      params, [&](double x) { return e_closed(x, t); }, scheme, 0);
  const QuadratureResult q1 = integrate_weighted(
      params,
      [&](double x) { return e_closed(x, t) * (2.0 * l * std::cos(phi) + 2.0 * x * std::sin(phi)); },
      scheme, 1);
  return {{q0.value / h0, expansion_coeff(params, t, 0)},
          {q1.value / (2.0 * l * h0), expansion_coeff(params, t, 1)}};
}

}  // namespace meixner
