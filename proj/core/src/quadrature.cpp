#include "meixner/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace meixner {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

void QuadratureScheme::validate() const {
  if (panels < 1) throw std::invalid_argument("QuadratureScheme: panels must be >= 1");
  if (nodes_per_panel < 2)
    throw std::invalid_argument("QuadratureScheme: nodes_per_panel must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("QuadratureScheme: tol must be > 0");
  if (max_doublings < 0)
    throw std::invalid_argument("QuadratureScheme: max_doublings must be >= 0");
  if (!std::isfinite(half_width))
    throw std::invalid_argument("QuadratureScheme: half_width must be finite");
}

std::vector<double> panel_breakpoints(double a, double b, int panels,
                                      std::span<const FocusPoint> focus) {
  std::vector<double> breaks;
  const double h = (b - a) / panels;
  for (int i = 0; i <= panels; ++i) breaks.push_back(a + i * h);
  for (const FocusPoint& fp : focus) {
    if (!(fp.width > 0.0)) continue;
    breaks.push_back(std::clamp(fp.center, a, b));
    for (double d = fp.width; d < h; d *= 2.0) {
      if (fp.center - d > a) breaks.push_back(fp.center - d);
      if (fp.center + d < b) breaks.push_back(fp.center + d);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double u, double v) { return std::abs(u - v) < 1e-15 * (1.0 + std::abs(u)); }),
               breaks.end());
  return breaks;
}

Complex integrate_panels(const RealIntegrand& f, std::span<const double> breaks,
                         const GaussLegendreRule& rule) {
  Complex total = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    Complex panel = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      panel += rule.weights[j] * f(mid + half * rule.nodes[j]);
    total += half * panel;
  }
  return total;
}

namespace {

std::vector<double> bisect_all(const std::vector<double>& breaks) {
  std::vector<double> out;
  out.reserve(2 * breaks.size());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    out.push_back(breaks[i]);
    out.push_back(0.5 * (breaks[i] + breaks[i + 1]));
  }
  out.push_back(breaks.back());
  return out;
}

}  // namespace

QuadratureResult integrate_interval(const RealIntegrand& f, double a, double b,
                                    const QuadratureScheme& scheme,
                                    std::span<const FocusPoint> focus) {
  scheme.validate();
  const GaussLegendreRule rule = gauss_legendre(scheme.nodes_per_panel);
  std::vector<double> breaks = panel_breakpoints(a, b, scheme.panels, focus);
  Complex coarse = integrate_panels(f, breaks, rule);
  for (int level = 0; level <= scheme.max_doublings; ++level) {
    breaks = bisect_all(breaks);
    const Complex fine = integrate_panels(f, breaks, rule);
    const double err = std::abs(fine - coarse);
    if (err <= scheme.tol * std::max(1.0, std::abs(fine))) {
      return {fine, err, static_cast<int>(breaks.size()) - 1};
    }
    coarse = fine;
  }
  std::ostringstream msg;
  msg << "integrate_interval: refinement stalled on [" << a << ", " << b
      << "] after " << scheme.max_doublings << " doublings";
  throw ConvergenceError(msg.str());
}

Complex integrate_segment(const ComplexIntegrand& f, Complex a, Complex b, int nodes) {
  const GaussLegendreRule rule = gauss_legendre(nodes);
  const Complex mid = 0.5 * (a + b);
  const Complex half = 0.5 * (b - a);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    sum += rule.weights[j] * f(mid + half * rule.nodes[j]);
  return half * sum;
}

}  // namespace meixner
