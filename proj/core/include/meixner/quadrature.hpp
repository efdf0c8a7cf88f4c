#pragma once

#include <functional>
#include <span>
#include <vector>

#include "meixner/foundations.hpp"

namespace meixner {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

/// Truncation and panel layout for real-line integrals.
///
/// half_width <= 0 asks the caller to pick X from the integrand's decay.
/// `panels` is the starting panel count; refinement doubles it until two
/// successive estimates differ by at most tol * max(1, |value|).
struct QuadratureScheme {
  double half_width = 0.0;
  int panels = 40;
  int nodes_per_panel = 32;
  double tol = 1e-10;
  int max_doublings = 6;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  int panels_used = 0;
};

using RealIntegrand = std::function<Complex(double)>;
using ComplexIntegrand = std::function<Complex(Complex)>;

/// A point where the integrand varies on scale `width` (e.g. a nearby pole at
/// distance `width` from the real axis). Panels are graded geometrically
/// towards it.
struct FocusPoint {
  double center;
  double width;
};

/// Breakpoints for [a, b] with `panels` uniform panels, refined around each
/// focus point so that panels near it are no wider than its scale.
std::vector<double> panel_breakpoints(double a, double b, int panels,
                                      std::span<const FocusPoint> focus = {});

/// Fixed composite rule over consecutive breakpoints.
Complex integrate_panels(const RealIntegrand& f, std::span<const double> breaks,
                         const GaussLegendreRule& rule);

/// Composite Gauss-Legendre on [a, b] with panel doubling until the scheme's
/// tolerance is met. Throws ConvergenceError if it never is.
QuadratureResult integrate_interval(const RealIntegrand& f, double a, double b,
                                    const QuadratureScheme& scheme,
                                    std::span<const FocusPoint> focus = {});

/// Single n-point Gauss-Legendre rule along the straight segment [a, b] in
/// the complex plane.
Complex integrate_segment(const ComplexIntegrand& f, Complex a, Complex b, int nodes = 64);

}  // namespace meixner
