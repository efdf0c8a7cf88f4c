#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meixner/foundations.hpp"
#include "meixner/quadrature.hpp"
#include "meixner/t_calculus.hpp"

namespace meixner {

/// Real-line pairing (f, g) = int f(x) g(x) dx, bilinear (no conjugation).
///
/// The scheme's half_width is the truncation; when it is left automatic the
/// integral runs over [-12, 12], enough for Gaussian-decaying test functions.
double inner_product(const RealIntegrand& f, const RealIntegrand& g, const QuadratureScheme& scheme);

/// Same pairing keeping the imaginary part; T maps real functions to
/// complex-valued ones off the axis only, but intermediate values are complex.
Complex pairing(const RealIntegrand& f, const RealIntegrand& g, const QuadratureScheme& scheme);

/// |(Tf, g) + (f, Tg)|. Zero for strip-analytic f, g decaying at infinity.
double antisymmetry_check(const StripFunction& f, const StripFunction& g, const QuadratureScheme& scheme);

/// The operator y -> (1/w) T[p T y] for positive w, p.
///
/// Eigenpairs (lambda_n, y_n) of (1/w) T[p T y_n] = lambda_n y_n are
/// w-orthogonal for distinct eigenvalues; this type only applies the
/// operator, it does not construct eigenpairs.
struct SLOperator {
  std::function<double(double)> weight_fn;
  StripFunction p_fn;
};

/// Pointwise (1/w(x)) T[p T f](x). Requires f analytic in |Im z| <= 1 and
/// p in |Im z| <= 1/2.
Complex sl_apply(const SLOperator& op, const StripFunction& f, double x);

/// Real part of (p Tf, Tf); nonnegative for p > 0 and f real on the axis.
double positivity_check(const SLOperator& op, const StripFunction& f, const QuadratureScheme& scheme);

/// (T p T f, g) - (T p T g, f): the symmetry that makes eigenfunctions with
/// distinct eigenvalues orthogonal.
Complex sl_symmetry_residual(const StripFunction& p, const StripFunction& f, const StripFunction& g,
                             const QuadratureScheme& scheme);

/// Hermite function H_k(z) e^{-z^2/2} (physicists' H_k), entire.
StripFunction hermite_function(int k);

/// scale * z^k * e^{-a z^2}, entire.
StripFunction gaussian_monomial(int k, double a, double scale = 1.0);

struct TestPair {
  std::string name;
  StripFunction f;
  StripFunction g;
};

/// Ten (f, g) pairs of Gaussians and Hermite functions, all real on the
/// real axis and decaying in every horizontal strip.
std::vector<TestPair> gaussian_hermite_battery();

}  // namespace meixner
