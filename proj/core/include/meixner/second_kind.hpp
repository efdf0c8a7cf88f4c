#pragma once

#include <optional>
#include <vector>

#include "meixner/foundations.hpp"
#include "meixner/polynomials.hpp"
#include "meixner/quadrature.hpp"

namespace meixner {

/// Smallest |Im z| at which the real-line Cauchy integral is attempted.
inline constexpr double kCauchyGuard = 0.25;

/// w(z) Q_n(z) = int P_n(t) w(t) / (z - t) dt over the real line.
///
/// This is the form every identity is stated in; it stays finite at the
/// poles of the continued weight w(z). Requires |Im z| >= kCauchyGuard.
Complex weighted_cauchy(const MPParams& params, Complex z, int n,
                        const QuadratureScheme& scheme = {});

/// Q_n(z) = weighted_cauchy / w(z). Throws DomainError at poles of w(z).
Complex q_integral(const MPParams& params, Complex z, int n,
                   const QuadratureScheme& scheme = {});

/// Path u = e^{-i phi} s, s in [0, 1], with the endpoint singularity at s = 1
/// removed by 1 - s = w^m and panels graded geometrically towards w = 0.
struct ContourSpec {
  int substitution_power = 0;  // m; 0 picks max(2, ceil(2/lambda))
  int panels = 8;
  int nodes = 32;
  int grading_levels = 40;
};

/// int_0^{e^{-i phi}} (1 - u e^{i phi})^{lambda - iz - 1} (1 - u e^{-i phi})^{lambda + iz - 1} du.
/// Requires Im z > 0.
Complex contour_integral(const MPParams& params, Complex z, const ContourSpec& contour = {});

/// w(z) Q_0(z) from the contour form
///   2 pi Gamma(2 lambda) / (2 sin phi)^{2 lambda - 1} * contour_integral.
/// Lower half-plane values are the conjugate of the value at conj(z).
Complex weighted_q0_closed(const MPParams& params, Complex z, const ContourSpec& contour = {});

/// Q_0(z) from the contour form.
Complex q0_closed(const MPParams& params, Complex z, const ContourSpec& contour = {});

enum class SeedMode {
  integral,  // Q_0, Q_1 both from the Cauchy integral
  raising,   // Q_1 from T[w_{lambda+1/2} Q_0^{(lambda+1/2)}] = -w_lambda Q_1
};

/// Q_0..Q_N generated by the three-term recurrence from two seeds.
struct SecondKindEval {
  Complex z;
  int n_max = 0;
  std::vector<Complex> values;
  /// max_n |P_n(z)| |Q_0(z)| / |Q_n(z)|: how much a seed error can grow.
  double amplification = 1.0;
  double seed_error = 0.0;
  /// Set when amplification * seed_error exceeds 1e-6.
  bool unstable = false;
};

SecondKindEval q_recurrence(const MPParams& params, Complex z, int N,
                            const QuadratureScheme& scheme = {},
                            SeedMode seed = SeedMode::integral);

/// Lowering T Q_n = 2 sin(phi) Q_{n-1}^{(lambda+1/2)} (absent for n = 0) and
/// raising T[w Q_n] = -(n+1) w_{lambda-1/2} Q_{n+1}^{(lambda-1/2)} (needs lambda > 1/2).
struct SecondKindRelations {
  std::optional<IdentitySides> lowering;
  IdentitySides raising;
};

/// Requires |Im z| >= kCauchyGuard + 1/2.
SecondKindRelations lowering_raising_q(const MPParams& params, Complex z, int n,
                                       const QuadratureScheme& scheme = {});

/// (w Q_n at z, (-1)^n / n! T^n[w_{lambda+n/2} Q_0^{(lambda+n/2)}] at z).
/// Requires |Im z| >= kCauchyGuard + n/2.
IdentitySides rodrigues_check(const MPParams& params, Complex z, int n,
                              const QuadratureScheme& scheme = {});

/// (P*_n(x) / P_n(x), 2 sin(phi) contour_integral(x)). Requires Im x > 0.
IdentitySides stieltjes_ratio_check(const MPParams& params, Complex x, int n,
                                    const ContourSpec& contour = {});

struct InversionCheck {
  double estimate;  // (F(x - i eps) - F(x + i eps)) / (2 pi i)
  double weight;    // W(x)
};

/// Boundary jump of the Stieltjes transform F(z) = int W(t)/(z - t) dt at
/// distance eps, against the normalized weight. Requires 0 < eps <= 0.1.
InversionCheck inversion_weight_check(const MPParams& params, double x, double eps,
                                      const QuadratureScheme& scheme = {});

}  // namespace meixner
