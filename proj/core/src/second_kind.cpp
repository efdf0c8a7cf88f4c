#include "meixner/second_kind.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "meixner/t_calculus.hpp"
#include "meixner/weight.hpp"

namespace meixner {

namespace {

void require_offset(Complex z, double needed, const char* who) {
  if (std::abs(z.imag()) < needed) {
    std::ostringstream msg;
    msg << who << ": |Im z| = " << std::abs(z.imag()) << " below required " << needed;
    throw DomainError(msg.str());
  }
}

Complex cauchy_with_error(const MPParams& params, Complex z, int n, const QuadratureScheme& scheme,
                          double& rel_err) {
  const double offset = std::abs(z.imag());
  const FocusPoint focus{z.real(), 0.5 * offset};
  QuadratureScheme s = scheme;
  if (s.half_width <= 0.0) {
    s.half_width = std::max(choose_half_width(params, n + 1, s.tol), std::abs(z.real()) + 4.0 * offset);
  }
  const QuadratureResult r = integrate_weighted(
      params, [&](double t) { return mp_value(params, t, n) / (z - t); }, s, n + 1,
      std::span<const FocusPoint>(&focus, 1));
  rel_err = r.error_estimate / std::max(std::abs(r.value), 1e-300);
  return r.value;
}

// w_lambda(z) Q_n^{(lambda)}(z) without the guard, for points reached by T
// shifts whose distance the caller has already validated.
Complex cauchy_unguarded(const MPParams& params, Complex z, int n, const QuadratureScheme& scheme) {
  double ignored = 0.0;
  return cauchy_with_error(params, z, n, scheme, ignored);
}

}  // namespace

Complex weighted_cauchy(const MPParams& params, Complex z, int n, const QuadratureScheme& scheme) {
  if (n < 0) throw std::invalid_argument("weighted_cauchy: negative degree");
  require_offset(z, kCauchyGuard, "weighted_cauchy");
  return cauchy_unguarded(params, z, n, scheme);
}

Complex q_integral(const MPParams& params, Complex z, int n, const QuadratureScheme& scheme) {
  return weighted_cauchy(params, z, n, scheme) / weight_analytic(params, z);
}

Complex contour_integral(const MPParams& params, Complex z, const ContourSpec& contour) {
  if (!(z.imag() > 0.0)) throw DomainError("contour_integral: requires Im z > 0");
  const double l = params.lambda();
  const double phi = params.phi();
  const int m = contour.substitution_power > 0
                    ? contour.substitution_power
                    : std::max(2, static_cast<int>(std::ceil(2.0 / l)));
  const Complex a = l - kI * z;  // exponent a - 1 at s = 1
  const Complex b = l + kI * z;
  const Complex rot = std::exp(-2.0 * kI * phi);
  const Complex front = std::exp(-kI * phi) * static_cast<double>(m);

  // 1 - s = w^m:  integrand m w^{m a - 1} (1 - (1 - w^m) e^{-2i phi})^{b-1} e^{-i phi}
  auto integrand = [&](double w) -> Complex {
    if (w <= 0.0) return 0.0;
    const double wm = std::pow(w, m);
    const Complex base = 1.0 - (1.0 - wm) * rot;
    return front * std::exp((static_cast<double>(m) * a - 1.0) * std::log(w) + (b - 1.0) * std::log(base));
  };

  std::vector<double> breaks;
  for (int k = contour.grading_levels; k >= 1; --k) breaks.push_back(std::ldexp(1.0, -k));
  const double start = breaks.empty() ? 0.0 : breaks.back();
  for (int p = 1; p <= contour.panels; ++p)
    breaks.push_back(start + (1.0 - start) * p / contour.panels);
  breaks.insert(breaks.begin(), 0.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return integrate_panels(integrand, breaks, gauss_legendre(contour.nodes));
}

Complex weighted_q0_closed(const MPParams& params, Complex z, const ContourSpec& contour) {
  if (z.imag() == 0.0) throw DomainError("weighted_q0_closed: z must be non-real");
  if (z.imag() < 0.0) return std::conj(weighted_q0_closed(params, std::conj(z), contour));
  const double l = params.lambda();
  const double two_sin = 2.0 * std::sin(params.phi());
  const double pref = std::exp(std::log(2.0 * kPi) + std::lgamma(2.0 * l) - (2.0 * l - 1.0) * std::log(two_sin));
  return pref * contour_integral(params, z, contour);
}

Complex q0_closed(const MPParams& params, Complex z, const ContourSpec& contour) {
  return weighted_q0_closed(params, z, contour) / weight_analytic(params, z);
}

SecondKindEval q_recurrence(const MPParams& params, Complex z, int N, const QuadratureScheme& scheme,
                            SeedMode seed) {
  if (N < 0) throw std::invalid_argument("q_recurrence: negative N");
  if (z.imag() == 0.0) throw DomainError("q_recurrence: z must be non-real");
  const double l = params.lambda();
  const double phi = params.phi();
  const Complex w = weight_analytic(params, z);

  SecondKindEval out;
  out.z = z;
  out.n_max = N;
  double err0 = 0.0;
  require_offset(z, kCauchyGuard, "q_recurrence");
  out.values.push_back(cauchy_with_error(params, z, 0, scheme, err0) / w);
  out.seed_error = err0;
  if (N == 0) return out;

  if (seed == SeedMode::integral) {
    double err1 = 0.0;
    out.values.push_back(cauchy_with_error(params, z, 1, scheme, err1) / w);
    out.seed_error = std::max(err0, err1);
  } else {
    if (!(l > 0.0)) throw std::invalid_argument("q_recurrence: bad lambda");
    require_offset(z, kCauchyGuard + 0.5, "q_recurrence (raising seed)");
    const MPParams upper = params.shifted(0.5);
    const StripFunction wq0{[&](Complex v) { return cauchy_unguarded(upper, z + v, 0, scheme); },
                            std::abs(z.imag()) - kCauchyGuard};
    out.values.push_back(-apply_T(wq0, 0.0) / w);
  }

  const double s = std::sin(phi);
  const double c = std::cos(phi);
  for (int n = 1; n < N; ++n) {
    const Complex next = (2.0 * (z * s + (n + l) * c) * out.values[n] -
                          (n + 2.0 * l - 1.0) * out.values[n - 1]) /
                         static_cast<double>(n + 1);
    out.values.push_back(next);
  }

  const PolySequence p = eval_recurrence(params, z, N);
  const double q0 = std::abs(out.values[0]);
  for (int n = 0; n <= N; ++n) {
    const double qn = std::abs(out.values[static_cast<std::size_t>(n)]);
    if (qn > 0.0) out.amplification = std::max(out.amplification, std::abs(p[n]) * q0 / qn);
  }
  out.unstable = out.amplification * std::max(out.seed_error, 1e-16) > 1e-6;
  return out;
}

SecondKindRelations lowering_raising_q(const MPParams& params, Complex z, int n,
                                       const QuadratureScheme& scheme) {
  if (n < 0) throw std::invalid_argument("lowering_raising_q: negative degree");
  require_offset(z, kCauchyGuard + 0.5, "lowering_raising_q");
  const double reach = std::abs(z.imag()) - kCauchyGuard;
  SecondKindRelations out;

  if (n >= 1) {
    const StripFunction q{[&](Complex v) { return q_integral(params, z + v, n, scheme); }, reach};
    const Complex lhs = apply_T(q, 0.0);
    const Complex rhs = 2.0 * std::sin(params.phi()) * q_integral(params.shifted(0.5), z, n - 1, scheme);
    out.lowering = IdentitySides{lhs, rhs};
  }

  if (!(params.lambda() > 0.5))
    throw std::invalid_argument("lowering_raising_q: raising relation needs lambda > 1/2");
  const StripFunction wq{[&](Complex v) { return cauchy_unguarded(params, z + v, n, scheme); }, reach};
  const Complex lhs = apply_T(wq, 0.0);
  const Complex rhs = -(n + 1.0) * weighted_cauchy(params.shifted(-0.5), z, n + 1, scheme);
  out.raising = {lhs, rhs};
  return out;
}

IdentitySides rodrigues_check(const MPParams& params, Complex z, int n, const QuadratureScheme& scheme) {
  if (n < 0) throw std::invalid_argument("rodrigues_check: negative degree");
  require_offset(z, kCauchyGuard + 0.5 * n, "rodrigues_check");
  const Complex lhs = weighted_cauchy(params, z, n, scheme);
  const MPParams shifted = params.shifted(0.5 * n);
  const StripFunction wq0{[&](Complex v) { return cauchy_unguarded(shifted, z + v, 0, scheme); },
                          std::abs(z.imag()) - kCauchyGuard};
  double factor = 1.0;
  for (int k = 2; k <= n; ++k) factor /= k;
  if (n % 2 == 1) factor = -factor;
  return {lhs, factor * apply_T_power(wq0, 0.0, n)};
}

IdentitySides stieltjes_ratio_check(const MPParams& params, Complex x, int n, const ContourSpec& contour) {
  if (!(x.imag() > 0.0)) throw DomainError("stieltjes_ratio_check: requires Im x > 0");
  if (n < 1) throw std::invalid_argument("stieltjes_ratio_check: need n >= 1");
  const PolySequence num = numerator_recurrence(params, x, n);
  const PolySequence den = eval_recurrence(params, x, n);
  const Complex ratio = std::exp(Complex{num.log_abs(n) - den.log_abs(n), num.arg(n) - den.arg(n)});
  return {ratio, 2.0 * std::sin(params.phi()) * contour_integral(params, x, contour)};
}

InversionCheck inversion_weight_check(const MPParams& params, double x, double eps,
                                      const QuadratureScheme& scheme) {
  if (!(eps > 0.0 && eps <= 0.1))
    throw std::invalid_argument("inversion_weight_check: eps must lie in (0, 0.1]");
  // F(x - i eps) - F(x + i eps) = int W(t) 2 i eps / ((x - t)^2 + eps^2) dt
  const FocusPoint focus{x, 0.5 * eps};
  QuadratureScheme s = scheme;
  if (s.half_width <= 0.0) s.half_width = std::max(choose_half_width(params, 0, s.tol), std::abs(x) + 1.0);
  const QuadratureResult r = integrate_weighted(
      params,
      [&](double t) { return Complex{eps / ((x - t) * (x - t) + eps * eps)}; }, s, 0,
      std::span<const FocusPoint>(&focus, 1));
  const double h0 = orthogonality_norm(params, 0);
  return {r.value.real() / (kPi * h0), normalized_weight(params, x)};
}

}  // namespace meixner
