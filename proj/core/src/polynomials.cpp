#include "meixner/polynomials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace meixner {

namespace {

constexpr int kRescaleBits = 600;
const double kRescaleThreshold = std::ldexp(1.0, kRescaleBits);

void check_degree(int n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative degree");
  if (n > kMaxDegree)
    throw std::invalid_argument(std::string(who) + ": degree exceeds cap of " +
                                std::to_string(kMaxDegree));
}

#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 Wide;
#else
using Wide = long double;
#endif

struct WideComplex {
  Wide re;
  Wide im;
};

WideComplex mul(WideComplex a, WideComplex b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

WideComplex add(WideComplex a, WideComplex b) { return {a.re + b.re, a.im + b.im}; }

Complex narrow(WideComplex a) { return {static_cast<double>(a.re), static_cast<double>(a.im)}; }

// e^{i alpha} from the rounded cosine and sine, renormalized to unit modulus in
// extended precision (c^2 + s^2 differs from 1 by O(eps), so two terms of the
// inverse square root series suffice).
WideComplex unit_point(double alpha) {
  const Wide co = std::cos(alpha);
  const Wide si = std::sin(alpha);
  const Wide d = co * co + si * si - 1;
  const Wide inv = 1 - d / 2 + 3 * d * d / 8;
  return {co * inv, si * inv};
}

WideComplex conj_square(WideComplex u) { return {u.re * u.re - u.im * u.im, -2 * u.re * u.im}; }

WideComplex power(WideComplex u, int n) {
  WideComplex r{1, 0};
  for (int k = 0; k < n; ++k) r = mul(r, u);
  return r;
}

// e^{in alpha} sum_{k=0}^n (-n)_k (b)_k / ((c)_k k!) z^k at z = 1 - e^{-2i alpha}.
// The terms dwarf the sum as |z| approaches 2, hence the extended precision;
// the phase and z come from the same unit point so the product is the exact
// value at a slightly shifted alpha.
Complex terminating_2f1(int n, Complex b, double c, double alpha) {
  const WideComplex u = unit_point(alpha);
  const WideComplex w = conj_square(u);
  const WideComplex z{1 - w.re, -w.im};
  WideComplex term{1, 0};
  WideComplex sum{1, 0};
  for (int k = 0; k < n; ++k) {
    const Wide scale = static_cast<Wide>(k - n) / ((static_cast<Wide>(c) + k) * (k + 1));
    term = mul(mul(term, {(static_cast<Wide>(b.real()) + k) * scale, static_cast<Wide>(b.imag()) * scale}), z);
    sum = add(sum, term);
  }
  return narrow(mul(power(u, n), sum));
}

// e^{in phi} sum_k (l+ix)_k/k! (l-ix)_{n-k}/(n-k)! e^{-2ik phi}, same treatment.
Complex pochhammer_sum(double l, Complex x, int n, double phi) {
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<WideComplex> a(size);
  std::vector<WideComplex> b(size);
  a[0] = b[0] = {1, 0};
  const Wide lw = l;
  const Wide xr = x.real();
  const Wide xi = x.imag();
  for (int k = 0; k < n; ++k) {
    const Wide step = static_cast<Wide>(1) / (k + 1);
    // l + ix + k = (l + k - xi) + i xr;  l - ix + k = (l + k + xi) - i xr
    a[k + 1] = mul(a[k], {(lw + k - xi) * step, xr * step});
    b[k + 1] = mul(b[k], {(lw + k + xi) * step, -xr * step});
  }
  const WideComplex u = unit_point(phi);
  const WideComplex w = conj_square(u);
  WideComplex phase = power(u, n);
  WideComplex sum{0, 0};
  for (int k = 0; k <= n; ++k) {
    sum = add(sum, mul(mul(a[k], b[n - k]), phase));
    phase = mul(phase, w);
  }
  return narrow(sum);
}

// (2 lambda)_n / n!
double rising_over_factorial(double a, int n) {
  double r = 1.0;
  for (int j = 0; j < n; ++j) r *= (a + j) / (j + 1);
  return r;
}

}  // namespace

MPParams::MPParams(double lambda, double phi) : lambda_(lambda), phi_(phi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("MPParams: lambda must be > 0");
  if (!(phi > 0.0 && phi < kPi))
    throw std::invalid_argument("MPParams: phi must lie in (0, pi)");
}

GenMPParams::GenMPParams(double lambda, double theta, double psi)
    : lambda_(lambda), theta_(theta), psi_(psi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("GenMPParams: lambda must be > 0");
  if (!std::isfinite(theta) || !std::isfinite(psi))
    throw std::invalid_argument("GenMPParams: angles must be finite");
}

Complex PolySequence::operator[](int n) const {
  const auto i = static_cast<std::size_t>(n);
  const Complex m = mantissa_.at(i);
  const int e = exponent_.at(i);
  return {std::ldexp(m.real(), e), std::ldexp(m.imag(), e)};
}

double PolySequence::log_abs(int n) const {
  const auto i = static_cast<std::size_t>(n);
  return std::log(std::abs(mantissa_.at(i))) + exponent_.at(i) * std::log(2.0);
}

std::vector<Complex> PolySequence::values() const {
  std::vector<Complex> out;
  out.reserve(size());
  for (int n = 0; n <= degree_max(); ++n) out.push_back((*this)[n]);
  return out;
}

void PolySequence::push_back(Complex mantissa, int exponent) {
  mantissa_.push_back(mantissa);
  exponent_.push_back(exponent);
}

PolySequence solve_recurrence(double lambda, double phi, Complex x, Complex y0,
                              Complex y1, int N) {
  check_degree(N, "solve_recurrence");
  PolySequence seq(x);
  seq.push_back(y0, 0);
  if (N == 0) return seq;
  seq.push_back(y1, 0);

  const double s = std::sin(phi);
  const double c = std::cos(phi);
  Complex prev = y0;
  Complex cur = y1;
  int exponent = 0;
  for (int n = 1; n < N; ++n) {
    const Complex next =
        (2.0 * (x * s + (n + lambda) * c) * cur - (n + 2.0 * lambda - 1.0) * prev) /
        static_cast<double>(n + 1);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleThreshold) {
      prev = {std::ldexp(prev.real(), -kRescaleBits), std::ldexp(prev.imag(), -kRescaleBits)};
      cur = {std::ldexp(cur.real(), -kRescaleBits), std::ldexp(cur.imag(), -kRescaleBits)};
      exponent += kRescaleBits;
    }
    seq.push_back(cur, exponent);
  }
  return seq;
}

PolySequence eval_recurrence(const MPParams& params, Complex x, int N) {
  const double l = params.lambda();
  const double phi = params.phi();
  return solve_recurrence(l, phi, x, 1.0, 2.0 * l * std::cos(phi) + 2.0 * x * std::sin(phi),
                          N);
}

Complex mp_value(const MPParams& params, Complex x, int n) {
  return eval_recurrence(params, x, n)[n];
}

Complex eval_hyp(const MPParams& params, Complex x, int n) {
  check_degree(n, "eval_hyp");
  const double l = params.lambda();
  const double phi = params.phi();
  return rising_over_factorial(2.0 * l, n) * terminating_2f1(n, l + kI * x, 2.0 * l, phi);
}

Complex eval_sum(const MPParams& params, Complex x, int n) {
  check_degree(n, "eval_sum");
  return pochhammer_sum(params.lambda(), x, n, params.phi());
}

Complex eval_generalized(const GenMPParams& params, Complex x, int n) {
  check_degree(n, "eval_generalized");
  const double l = params.lambda();
  const double alpha = 0.5 * (params.theta() - params.psi());
  return rising_over_factorial(2.0 * l, n) * std::exp(kI * (n * (params.theta() - alpha))) *
         terminating_2f1(n, l + kI * x, 2.0 * l, alpha);
}

Complex eval_basis_phi(double lambda, Complex x, int n) {
  check_degree(n, "eval_basis_phi");
  return pochhammer(lambda + 0.5 * (1 - n) + kI * x, n);
}

PolySequence numerator_recurrence(const MPParams& params, Complex x, int N) {
  return solve_recurrence(params.lambda(), params.phi(), x, 0.0, 2.0 * std::sin(params.phi()),
                          N);
}

Complex numerator_explicit(const MPParams& params, Complex x, int n) {
  check_degree(n, "numerator_explicit");
  if (n == 0) return 0.0;
  const double l = params.lambda();
  const double phi = params.phi();
  const PolySequence p = eval_recurrence(params, x, n - 1);
  const PolySequence q = solve_recurrence(1.0 - l, phi, -x, 1.0,
                                          2.0 * (1.0 - l) * std::cos(phi) - 2.0 * x * std::sin(phi),
                                          n - 1);
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) sum += p[k] * q[n - k - 1] / static_cast<double>(n - k);
  return 2.0 * std::sin(phi) * sum;
}

IdentitySides connection_sides(const MPParams& params, Complex x, int n) {
  check_degree(n + 2, "connection_sides");
  const double l = params.lambda();
  const double phi = params.phi();
  const PolySequence p = eval_recurrence(params, x, n + 2);
  const Complex lhs = (l * l + x * x) * mp_value(params.shifted(1.0), x, n);
  const double two_sin = 2.0 * std::sin(phi);
  const double np1 = n + 1.0;
  const double np2 = n + 2.0;
  const Complex bracket = p[n + 2] - 2.0 * (2.0 * l + np1) * std::cos(phi) / np2 * p[n + 1] +
                          (2.0 * l + n) * (2.0 * l + np1) / (np2 * np1) * p[n];
  return {lhs, np2 * np1 / (two_sin * two_sin) * bracket};
}

Complex generating_function(const MPParams& params, Complex x, Complex t) {
  const double l = params.lambda();
  const double phi = params.phi();
  return cpow(1.0 - t * std::exp(kI * phi), -(l - kI * x)) *
         cpow(1.0 - t * std::exp(-kI * phi), -(l + kI * x));
}

Complex generating_function(const GenMPParams& params, Complex x, Complex t) {
  const double l = params.lambda();
  return cpow(1.0 - t * std::exp(kI * params.theta()), -(l - kI * x)) *
         cpow(1.0 - t * std::exp(kI * params.psi()), -(l + kI * x));
}

}  // namespace meixner
