#include "meixner/sturm_liouville.hpp"

#include <cmath>
#include <stdexcept>

namespace meixner {

namespace {

constexpr double kDefaultLineHalfWidth = 12.0;

QuadratureResult line_integral(const RealIntegrand& h, const QuadratureScheme& scheme) {
  const double X = scheme.half_width > 0.0 ? scheme.half_width : kDefaultLineHalfWidth;
  return integrate_interval(h, -X, X, scheme);
}

void require_width(const StripFunction& f, double needed, const char* who) {
  if (f.strip_halfwidth < needed)
    throw DomainError(std::string(who) + ": test function strip too narrow");
}

}  // namespace

Complex pairing(const RealIntegrand& f, const RealIntegrand& g, const QuadratureScheme& scheme) {
  return line_integral([&](double x) { return f(x) * g(x); }, scheme).value;
}

double inner_product(const RealIntegrand& f, const RealIntegrand& g, const QuadratureScheme& scheme) {
  return pairing(f, g, scheme).real();
}

double antisymmetry_check(const StripFunction& f, const StripFunction& g, const QuadratureScheme& scheme) {
  require_width(f, 0.5, "antisymmetry_check");
  require_width(g, 0.5, "antisymmetry_check");
  const Complex tf_g = pairing([&](double x) { return apply_T(f, x); }, [&](double x) { return g(x); }, scheme);
  const Complex f_tg = pairing([&](double x) { return f(x); }, [&](double x) { return apply_T(g, x); }, scheme);
  return std::abs(tf_g + f_tg);
}

Complex sl_apply(const SLOperator& op, const StripFunction& f, double x) {
  require_width(f, 1.0, "sl_apply");
  require_width(op.p_fn, 0.5, "sl_apply");
  const StripFunction inner{[&](Complex z) { return op.p_fn(z) * apply_T(f, z); }, 0.5};
  return apply_T(inner, x) / op.weight_fn(x);
}

double positivity_check(const SLOperator& op, const StripFunction& f, const QuadratureScheme& scheme) {
  require_width(f, 0.5, "positivity_check");
  return line_integral(
             [&](double x) {
               const Complex tf = apply_T(f, x);
               return op.p_fn(x) * tf * tf;
             },
             scheme)
      .value.real();
}

Complex sl_symmetry_residual(const StripFunction& p, const StripFunction& f, const StripFunction& g,
                             const QuadratureScheme& scheme) {
  require_width(f, 1.0, "sl_symmetry_residual");
  require_width(g, 1.0, "sl_symmetry_residual");
  require_width(p, 0.5, "sl_symmetry_residual");
  auto tpt = [&](const StripFunction& u) {
    return [&p, &u](double x) {
      const StripFunction inner{[&](Complex z) { return p(z) * apply_T(u, z); }, 0.5};
      return apply_T(inner, x);
    };
  };
  const Complex a = pairing(tpt(f), [&](double x) { return g(x); }, scheme);
  const Complex b = pairing(tpt(g), [&](double x) { return f(x); }, scheme);
  return a - b;
}

StripFunction hermite_function(int k) {
  if (k < 0) throw std::invalid_argument("hermite_function: negative order");
  return StripFunction::entire([k](Complex z) {
    Complex h0 = 1.0;
    Complex h1 = 2.0 * z;
    if (k == 0) return h0 * std::exp(-0.5 * z * z);
    for (int n = 1; n < k; ++n) {
      const Complex h2 = 2.0 * z * h1 - 2.0 * n * h0;
      h0 = h1;
      h1 = h2;
    }
    return h1 * std::exp(-0.5 * z * z);
  });
}

StripFunction gaussian_monomial(int k, double a, double scale) {
  if (k < 0) throw std::invalid_argument("gaussian_monomial: negative power");
  if (!(a > 0.0)) throw std::invalid_argument("gaussian_monomial: need a > 0");
  return StripFunction::entire([=](Complex z) {
    Complex zk = 1.0;
    for (int j = 0; j < k; ++j) zk *= z;
    return scale * zk * std::exp(-a * z * z);
  });
}

std::vector<TestPair> gaussian_hermite_battery() {
  return {
      {"gauss/gauss", gaussian_monomial(0, 1.0), gaussian_monomial(0, 1.0)},
      {"gauss/x*gauss", gaussian_monomial(0, 1.0), gaussian_monomial(1, 1.0)},
      {"x^2*gauss/gauss(0.5)", gaussian_monomial(2, 1.0), gaussian_monomial(0, 0.5)},
      {"gauss(0.3)/x^3*gauss", gaussian_monomial(0, 0.3), gaussian_monomial(3, 1.0)},
      {"h0/h1", hermite_function(0), hermite_function(1)},
      {"h1/h2", hermite_function(1), hermite_function(2)},
      {"h2/h2", hermite_function(2), hermite_function(2)},
      {"h3/h5", hermite_function(3), hermite_function(5)},
      {"h4/gauss", hermite_function(4), gaussian_monomial(0, 1.0)},
      {"h6/x*gauss(0.7)", hermite_function(6), gaussian_monomial(1, 0.7)},
  };
}

}  // namespace meixner
