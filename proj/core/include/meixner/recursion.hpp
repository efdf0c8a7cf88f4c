#pragma once

#include "meixner/foundations.hpp"
#include "meixner/polynomials.hpp"

namespace meixner {

/// A solution y_0..y_N of the three-term recurrence from given (y0, y1).
struct RecursionSolution {
  MPParams params;
  Complex x;
  Complex y0;
  Complex y1;
  PolySequence values;

  /// Largest relative residual of the recurrence over consecutive triples.
  double max_residual() const;
};

/// Requires N >= 1.
RecursionSolution general_solution(const MPParams& params, Complex x, Complex y0, Complex y1, int N);

/// Generating-function identity for an arbitrary solution:
///   lhs = (1 - t e^{i phi})^{lambda - ix} (1 - t e^{-i phi})^{lambda + ix} sum_{n<=N} y_n t^n
///   rhs = y0 + [y1 - 2x sin(phi) y0 - 2 lambda cos(phi) y0] int_0^t kernel(u) du
/// with the segment integral by 64-node Gauss-Legendre. Requires |t| <= 0.3.
IdentitySides gf_identity_check(const MPParams& params, Complex x, Complex y0, Complex y1,
                                Complex t, int N);

/// Two-term comparison
///   (lambda+ix)_n/n! e^{-in phi} (1 - e^{2i phi})^{-lambda+ix}
/// + (lambda-ix)_n/n! e^{in phi} (1 - e^{-2i phi})^{-lambda-ix}.
Complex darboux_P(const MPParams& params, Complex x, int n);

/// Single dominant term n^{lambda-ix-1}/Gamma(lambda-ix) e^{in phi} (1 - e^{-2i phi})^{-lambda-ix},
/// the Im x > 0 form.
Complex darboux_dominant(const MPParams& params, Complex x, int n);

/// |P_n - darboux_P| / (|first term| + |second term|), evaluated in log space.
double darboux_deviation(const MPParams& params, Complex x, int n);

/// Largest darboux_deviation over n..n + n/4: the envelope of the oscillating
/// error on the real line.
double darboux_envelope(const MPParams& params, Complex x, int n);

/// |P_n / darboux_dominant - 1|, evaluated in log space.
double darboux_dominant_deviation(const MPParams& params, Complex x, int n);

/// S_N = sum_{n<=N} |P_n(x)|^2 / h_n with h_n the orthogonality norm.
double l2_divergence_witness(const MPParams& params, double x, int N);

}  // namespace meixner
