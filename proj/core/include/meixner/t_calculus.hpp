#pragma once

#include <functional>
#include <limits>

#include "meixner/foundations.hpp"
#include "meixner/polynomials.hpp"

namespace meixner {

/// A function analytic in the band |Im z| <= strip_halfwidth.
///
/// The half-width is a contract: apply_T and friends refuse to evaluate the
/// wrapped callable outside it. Entire functions use infinity.
struct StripFunction {
  std::function<Complex(Complex)> evaluator;
  double strip_halfwidth = std::numeric_limits<double>::infinity();

  Complex operator()(Complex z) const { return evaluator(z); }

  static StripFunction entire(std::function<Complex(Complex)> f) {
    return {std::move(f), std::numeric_limits<double>::infinity()};
  }
};

/// (Tf)(x) = (f(x + i/2) - f(x - i/2)) / i.
Complex apply_T(const StripFunction& f, Complex x);

/// T^k f at x from the binomial form
///   T^k f(x) = (-i)^k sum_j (-1)^j C(k,j) f(x + i(k-2j)/2).
Complex apply_T_power(const StripFunction& f, Complex x, int k);

/// T wrapped as a new StripFunction with half-width reduced by 1/2.
StripFunction T_of(StripFunction f);

/// (T^k P_n^{(lambda)}(x), (2 sin phi)^k P_{n-k}^{(lambda+k/2)}(x)). Requires 1 <= k <= n.
IdentitySides lowering_pair(const MPParams& params, Complex x, int n, int k);

/// (T[w(.; lambda) P_n^{(lambda)}](x), -(n+1) w(x; lambda-1/2) P_{n+1}^{(lambda-1/2)}(x)),
/// with w the analytic continuation of the weight. Requires lambda > 1/2.
IdentitySides raising_pair(const MPParams& params, Complex x, int n);

}  // namespace meixner
