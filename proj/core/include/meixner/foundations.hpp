#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace meixner {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Input outside the domain of a function (gamma pole, branch point, strip
/// violation, zero denominator).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A quadrature or iteration that did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Pair of sides of an identity, returned by the *_check / *_pair operations
/// so callers can assert on them.
struct IdentitySides {
  Complex lhs;
  Complex rhs;

  double abs_error() const { return std::abs(lhs - rhs); }
  /// |lhs - rhs| / max(|lhs|, |rhs|, floor).
  double rel_error(double floor = 1e-300) const;
};

/// Principal log-gamma: exp(log_gamma(z)) == Gamma(z), imaginary part
/// reduced to (-pi, pi]. Lanczos approximation, reflection for Re z < 1/2.
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

/// Rising factorial (a)_k. Direct product for k <= 64, log-gamma ratio
/// beyond that.
Complex pochhammer(Complex a, int k);

/// Principal arcsinh: Log(z + sqrt(1 + z^2)).
Complex arcsinh(Complex z);

/// a^b = exp(b Log a), principal Log. 0^b is 0 for Re b > 0.
Complex cpow(Complex a, Complex b);

/// log |Gamma(lambda + i x)|^2 for real lambda, x, evaluated as
/// Re[log_gamma(lambda + ix) + log_gamma(lambda - ix)].
double log_abs_gamma_sq(double lambda, double x);

/// True if z is (numerically) a non-positive integer.
bool is_gamma_pole(Complex z);

}  // namespace meixner
