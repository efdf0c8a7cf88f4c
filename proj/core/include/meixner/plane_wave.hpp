#pragma once

#include <vector>

#include "meixner/foundations.hpp"
#include "meixner/polynomials.hpp"

namespace meixner {

/// T-exponential E(x, t) = exp(2ix arcsinh(t/2)). Eigenfunction of T with
/// eigenvalue it. Throws DomainError at the branch points t = +-2i.
Complex e_closed(Complex x, Complex t);

/// g_lambda(t) times the partial sum of phi_n(x) t^n / n! up to N.
Complex e_series(double lambda, Complex x, Complex t, int N);

/// g_lambda(t) = sqrt(1 + t^2/4) (t/2 + sqrt(1 + t^2/4))^{-2 lambda}.
Complex g_normalizer(double lambda, Complex t);

/// C = cos(2x arcsinh(t/2)), S = sin(2x arcsinh(t/2)); E = C + iS.
struct TrigPair {
  Complex c;
  Complex s;
};
TrigPair c_and_s(Complex x, Complex t);

/// Common ratio g_{n+1}/g_n = (it / (2 sin phi)) (sin phi / sin(phi + i arcsinh(t/2))).
Complex expansion_ratio(const MPParams& params, Complex t);

/// g_n(t, lambda) = (it/(2 sin phi))^n (sin phi / sin(phi + i arcsinh(t/2)))^{2 lambda + n}.
/// Throws DomainError when the sine in the denominator vanishes.
Complex expansion_coeff(const MPParams& params, Complex t, int n);

/// Coefficients g_0..g_N of E(x, t) in the P_n^{(lambda)} basis.
struct ExpansionCoeffs {
  Complex t;
  double lambda = 0.0;
  double phi = 0.0;
  std::vector<Complex> coeffs;
};
ExpansionCoeffs expansion_coeffs(const MPParams& params, Complex t, int N);

/// sum_{n <= N} g_n(t) P_n^{(lambda)}(x).
Complex plane_wave_partial(const MPParams& params, Complex x, Complex t, int N);

}  // namespace meixner
