#pragma once

#include <vector>

#include "meixner/foundations.hpp"

namespace meixner {

/// Largest degree any evaluation route accepts.
inline constexpr int kMaxDegree = 500;

/// Parameters (lambda, phi) of one Meixner-Pollaczek family.
/// Invariants: lambda > 0, 0 < phi < pi. Violations throw std::invalid_argument.
class MPParams {
public:
  MPParams(double lambda, double phi);

  double lambda() const { return lambda_; }
  double phi() const { return phi_; }

  /// Same phi, lambda shifted by `delta`; re-validated.
  MPParams shifted(double delta) const { return {lambda_ + delta, phi_}; }

private:
  double lambda_;
  double phi_;
};

/// Parameters of the generalized family P_n(x; theta, psi). lambda > 0.
class GenMPParams {
public:
  GenMPParams(double lambda, double theta, double psi);

  double lambda() const { return lambda_; }
  double theta() const { return theta_; }
  double psi() const { return psi_; }

private:
  double lambda_;
  double theta_;
  double psi_;
};

/// Values y_0..y_N of a recurrence solution at one point.
///
/// Entries are stored as a mantissa with a binary exponent so that the
/// magnitude stays available through log_abs() after the plain value
/// overflows a double.
class PolySequence {
public:
  PolySequence() = default;
  explicit PolySequence(Complex point) : point_(point) {}

  Complex point() const { return point_; }
  int degree_max() const { return static_cast<int>(mantissa_.size()) - 1; }
  std::size_t size() const { return mantissa_.size(); }

  /// Value of the degree-n entry; may be +-inf if it exceeds double range.
  Complex operator[](int n) const;
  double log_abs(int n) const;
  double arg(int n) const { return std::arg(mantissa_.at(static_cast<std::size_t>(n))); }
  std::vector<Complex> values() const;

  void push_back(Complex mantissa, int exponent);

private:
  Complex point_{};
  std::vector<Complex> mantissa_;
  std::vector<int> exponent_;
};

/// Forward three-term recurrence
///   (n+1) y_{n+1} = 2[x sin(phi) + (n+lambda) cos(phi)] y_n - (n+2 lambda-1) y_{n-1}
/// from arbitrary (y0, y1). No restriction on lambda: the numerator
/// convolution needs the 1-lambda family as a polynomial identity.
PolySequence solve_recurrence(double lambda, double phi, Complex x, Complex y0,
                              Complex y1, int N);

/// P_0..P_N by forward recurrence (production route).
PolySequence eval_recurrence(const MPParams& params, Complex x, int N);

/// P_n by forward recurrence.
Complex mp_value(const MPParams& params, Complex x, int n);

/// P_n from the terminating 2F1 representation.
Complex eval_hyp(const MPParams& params, Complex x, int n);

/// P_n from the bilateral Pochhammer sum.
Complex eval_sum(const MPParams& params, Complex x, int n);

/// Generalized family P_n(x; theta, psi) from its 2F1 representation.
Complex eval_generalized(const GenMPParams& params, Complex x, int n);

/// phi_n(x) = (lambda + (1-n)/2 + ix)_n, the T-calculus analogue of x^n.
Complex eval_basis_phi(double lambda, Complex x, int n);

/// Numerator polynomials: same recurrence with y0 = 0, y1 = 2 sin(phi).
PolySequence numerator_recurrence(const MPParams& params, Complex x, int N);

/// Numerator polynomial from the convolution with the (1-lambda) family at -x.
Complex numerator_explicit(const MPParams& params, Complex x, int n);

/// Both sides of (lambda^2 + x^2) P_n^{(lambda+1)} = combination of
/// P_n, P_{n+1}, P_{n+2} at parameter lambda.
IdentitySides connection_sides(const MPParams& params, Complex x, int n);

/// Closed form of sum_n P_n t^n, valid for |t| < 1.
Complex generating_function(const MPParams& params, Complex x, Complex t);

/// Closed form of sum_n P_n(x; theta, psi) t^n.
Complex generating_function(const GenMPParams& params, Complex x, Complex t);

}  // namespace meixner
