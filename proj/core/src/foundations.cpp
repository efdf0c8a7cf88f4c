#include "meixner/foundations.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace meixner {

namespace {

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

double reduce_phase(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// log Gamma for Re z >= 1/2, any branch.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i)
    sum += kLanczosCoef[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) up to a multiple of 2 pi i, stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double n = std::round(z.real());
  const Complex f{z.real() - n, z.imag()};
  const Complex w = kPi * f;
  Complex out;
  if (w.imag() > 20.0) {
    out = -kI * w + std::log(1.0 - std::exp(2.0 * kI * w)) - std::log(-2.0 * kI);
  } else if (w.imag() < -20.0) {
    out = kI * w + std::log(1.0 - std::exp(-2.0 * kI * w)) - std::log(2.0 * kI);
  } else {
    out = std::log(std::sin(w));
  }
  // sin(pi (n + f)) = (-1)^n sin(pi f)
  if (std::fmod(std::abs(n), 2.0) == 1.0) out += Complex{0.0, kPi};
  return out;
}

}  // namespace

double IdentitySides::rel_error(double floor) const {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), floor});
  return std::abs(lhs - rhs) / scale;
}

bool is_gamma_pole(Complex z) {
  if (z.real() > 0.5) return false;
  const double n = std::round(z.real());
  const double tol = 1e-14 * std::max(1.0, std::abs(z.real()));
  return std::abs(z.imag()) <= tol && std::abs(z.real() - n) <= tol;
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (is_gamma_pole(z)) {
    std::ostringstream msg;
    msg << "log_gamma: pole of Gamma at z = " << std::round(z.real());
    throw DomainError(msg.str());
  }
  Complex out;
  if (z.real() < 0.5) {
    out = std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  } else {
    out = lanczos_log_gamma(z);
  }
  return {out.real(), reduce_phase(out.imag())};
}

Complex pochhammer(Complex a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative order");
  if (k <= 64 || is_gamma_pole(a) || is_gamma_pole(a + static_cast<double>(k))) {
    Complex prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= a + static_cast<double>(j);
    return prod;
  }
  return std::exp(log_gamma(a + static_cast<double>(k)) - log_gamma(a));
}

Complex arcsinh(Complex z) { return std::asinh(z); }

Complex cpow(Complex a, Complex b) {
  if (a == Complex{0.0, 0.0}) {
    if (b == Complex{0.0, 0.0}) return 1.0;
    if (b.real() > 0.0) return 0.0;
    throw DomainError("cpow: zero base with exponent of non-positive real part");
  }
  return std::exp(b * std::log(a));
}

double log_abs_gamma_sq(double lambda, double x) {
  return (log_gamma({lambda, x}) + log_gamma({lambda, -x})).real();
}

}  // namespace meixner
