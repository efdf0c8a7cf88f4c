#pragma once

#include <span>
#include <vector>

#include "meixner/foundations.hpp"
#include "meixner/polynomials.hpp"
#include "meixner/quadrature.hpp"

namespace meixner {

/// log w(x) = (2 phi - pi) x + log |Gamma(lambda + ix)|^2.
double log_weight(const MPParams& params, double x);

struct WeightSample {
  double value = 0.0;
  bool underflow = false;
};

/// w(x) exponentiated from log space; underflow is reported, not thrown.
WeightSample weight_sample(const MPParams& params, double x);

/// w(x) = e^{(2 phi - pi) x} |Gamma(lambda + ix)|^2, 0 on underflow.
double weight(const MPParams& params, double x);

/// Analytic continuation e^{(2 phi - pi) z} Gamma(lambda + iz) Gamma(lambda - iz).
/// Throws DomainError at the gamma poles z = +-i(lambda + m).
Complex weight_analytic(const MPParams& params, Complex z);

/// Squared norm 2 pi Gamma(n + 2 lambda) / ((2 sin phi)^{2 lambda} n!).
double orthogonality_norm(const MPParams& params, int n);

/// Truncation X such that w(x) (1+|x|)^poly_degree is negligible against
/// `tol` beyond +-X, with a 20% margin.
double choose_half_width(const MPParams& params, int poly_degree, double tol);

/// Integral of integrand(x) w(x) over [-X, X] by refined composite
/// Gauss-Legendre. `poly_degree` bounds the integrand's polynomial growth
/// and only matters when the scheme leaves X automatic.
QuadratureResult integrate_weighted(const MPParams& params, const RealIntegrand& integrand,
                                    const QuadratureScheme& scheme, int poly_degree = 0,
                                    std::span<const FocusPoint> focus = {});

/// Gram matrix of P_0..P_N under w, entry (m, n) divided by
/// sqrt(h_m h_n) with h_n the closed-form squared norm.
struct GramMatrix {
  int N = 0;
  std::vector<double> entries;  // row-major, (N+1) x (N+1)
  double error_estimate = 0.0;

  double at(int m, int n) const { return entries[static_cast<std::size_t>(m * (N + 1) + n)]; }
  double max_offdiag() const;
  double max_diag_deviation() const;
};

/// N <= 25.
GramMatrix orthogonality_matrix(const MPParams& params, int N, const QuadratureScheme& scheme);

/// Mass-one weight W(x) = (2 sin phi)^{2 lambda} / (2 pi Gamma(2 lambda)) w(x).
double normalized_weight(const MPParams& params, double x);

/// ((sec z)^lambda, 2^{lambda-2}/(pi Gamma(lambda)) int e^{zt} |Gamma((lambda+it)/2)|^2 dt).
/// Requires lambda > 0 and |Re z| < pi/2.
IdentitySides sec_integral_check(double lambda, Complex z, const QuadratureScheme& scheme);

/// g_0 and g_1 of the plane-wave expansion, each as (quadrature, closed form).
struct ExpansionCoeffCheck {
  IdentitySides g0;
  IdentitySides g1;
};

/// Projections of E(., t) onto P_0 and P_1 under w vs the closed forms.
/// Requires |t| <= 1/2.
ExpansionCoeffCheck g01_check(const MPParams& params, double t, const QuadratureScheme& scheme);

}  // namespace meixner
