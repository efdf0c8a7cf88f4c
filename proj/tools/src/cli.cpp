#include "meixner/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "meixner/meixner.hpp"

namespace meixner::cli {

namespace {

using nlohmann::json;

class Uniform {
public:
  explicit Uniform(std::uint64_t seed) : gen_(seed) {}
  double operator()(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 gen_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

std::string fmt(Complex v) {
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0.0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

json to_json(Complex v) { return json::array({v.real(), v.imag()}); }

double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

double rel_floor1(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

/// Accumulates the worst error of one named identity.
class CheckList {
public:
  void add(const std::string& name, double error, double tolerance, bool extra_ok = true) {
    auto [it, fresh] = checks_.try_emplace(name, CheckResult{name, 0.0, tolerance, true});
    CheckResult& c = it->second;
    if (std::isnan(error)) error = std::numeric_limits<double>::infinity();
    c.max_error = std::max(c.max_error, error);
    c.pass = c.pass && extra_ok && c.max_error <= c.tolerance;
  }

  std::vector<CheckResult> sorted() const {
    std::vector<CheckResult> out;
    for (const auto& [name, c] : checks_) out.push_back(c);
    return out;
  }

private:
  std::map<std::string, CheckResult> checks_;
};

struct Outcome {
  json values = json::object();
  std::vector<CheckResult> checks;
  std::vector<std::string> text;
  std::string csv;
};

StripFunction windowed_quadratic() {
  return StripFunction::entire([](Complex z) { return 1.0 + z * z * std::exp(-z * z / 16.0); });
}

// ---------------------------------------------------------------- verify

void foundations_checks(CheckList& cl, Uniform& u) {
  for (int i = 0; i < 20; ++i) {
    const Complex z{u(0.1, 10.0), u(-5.0, 5.0)};
    cl.add("foundations.gamma_recurrence", rel(gamma(z + 1.0), z * gamma(z)), 1e-12);
    const Complex w{u(-3.0, 3.0), u(0.2, 2.0)};
    cl.add("foundations.gamma_reflection", rel(gamma(w) * gamma(1.0 - w) * std::sin(kPi * w), kPi), 1e-11);
  }
}

void polynomial_checks(CheckList& cl, Uniform& u, const MPParams& p) {
  for (int i = 0; i < 10; ++i) {
    const double x = u(-10.0, 10.0);
    const PolySequence seq = eval_recurrence(p, x, 30);
    for (int n = 0; n <= 30; ++n) {
      const Complex h = eval_hyp(p, x, n);
      const Complex s = eval_sum(p, x, n);
      cl.add("polynomials.three_route_agreement", std::max(rel(seq[n], h), rel(s, h)), 1e-10);
    }
  }
  for (int i = 0; i < 5; ++i) {
    const Complex x{u(-5.0, 5.0), u(-1.0, 1.0)};
    for (int n = 0; n <= 15; ++n) cl.add("polynomials.connection_relation", connection_sides(p, x, n).rel_error(), 1e-9);
    const PolySequence num = numerator_recurrence(p, x, 20);
    for (int n = 0; n <= 20; ++n)
      cl.add("polynomials.numerator_convolution", rel_floor1(numerator_explicit(p, x, n), num[n]), 1e-9);
  }
  for (int i = 0; i < 5; ++i) {
    const double x = u(-3.0, 3.0);
    const Complex t = 0.2 * std::exp(kI * u(0.0, 2.0 * kPi));
    const PolySequence seq = eval_recurrence(p, x, 60);
    Complex sum = 0.0;
    Complex tn = 1.0;
    for (int n = 0; n <= 60; ++n) {
      sum += seq[n] * tn;
      tn *= t;
    }
    cl.add("polynomials.generating_function", std::abs(sum - generating_function(p, x, t)), 1e-9);
  }
}

void t_calculus_checks(CheckList& cl, Uniform& u, const MPParams& p) {
  for (int i = 0; i < 3; ++i) {
    const double x = u(-5.0, 5.0);
    for (int n = 1; n <= 10; ++n)
      for (int k = 1; k <= std::min(3, n); ++k)
        cl.add("t_calculus.lowering", lowering_pair(p, x, n, k).rel_error(), 1e-9);
    if (p.lambda() > 0.5)
      for (int n = 0; n <= 10; ++n) cl.add("t_calculus.raising", raising_pair(p, x, n).rel_error(), 1e-9);
  }
}

void plane_wave_checks(CheckList& cl, Uniform& u, const RunConfig& cfg, const MPParams& p) {
  for (int i = 0; i < 10; ++i) {
    const Complex t{u(-1.0, 1.0), u(-0.5, 0.5)};
    const Complex x{u(-3.0, 3.0), u(-0.3, 0.3)};
    const auto e = StripFunction::entire([t](Complex z) { return e_closed(z, t); });
    const Complex ex = e_closed(x, t);
    const double scale = std::max(1.0, std::abs(ex));
    cl.add("plane_wave.t_eigenfunction", std::abs(apply_T(e, x) - kI * t * ex) / scale, 1e-11);
    cl.add("plane_wave.t_eigenfunction", std::abs(apply_T_power(e, x, 2) + t * t * ex) / scale, 1e-11);

    const Complex ts = u(0.0, 0.5) * std::exp(kI * u(0.0, 2.0 * kPi));
    const double xs = u(-3.0, 3.0);
    const Complex series = e_series(p.lambda(), xs, ts, 80);
    cl.add("plane_wave.series_limit", std::abs(series - e_closed(xs, ts)), 1e-9);
    cl.add("plane_wave.lambda_independence", std::abs(series - e_series(p.lambda() + 0.7, xs, ts, 80)), 1e-9);

    const double xr = u(-5.0, 5.0);
    const double tr = u(-3.0, 3.0);
    cl.add("plane_wave.exponential_limit",
           std::abs(e_closed(xr, 2.0 * std::sinh(0.5 * tr)) - std::exp(kI * (xr * tr))), 1e-12);
  }
  const Complex tg = 0.4 * std::exp(kI * u(0.0, 2.0 * kPi));
  const ExpansionCoeffs g = expansion_coeffs(p, tg, 22);
  const double s = std::sin(p.phi());
  for (int n = 0; n <= 20; ++n) {
    const auto& c = g.coeffs;
    const Complex lhs = -tg * tg * (c[n] - 2.0 * std::cos(p.phi()) * c[n + 1] + c[n + 2]);
    cl.add("plane_wave.coefficient_difference_equation",
           std::abs(lhs - 4.0 * s * s * c[n + 2]) / std::max(1.0, std::abs(c[n])), 1e-11);
  }
  const double x0 = cfg.x.front();
  cl.add("plane_wave.expansion_convergence",
         std::abs(plane_wave_partial(p, x0, cfg.t, 120) - e_closed(x0, cfg.t)), 1e-8);
}

void quadrature_checks(CheckList& cl, const RunConfig& cfg, const MPParams& p) {
  const GramMatrix gm = orthogonality_matrix(p, 10, cfg.quadrature);
  cl.add("quadrature_weight.orthogonality", std::max(gm.max_offdiag(), gm.max_diag_deviation()), 1e-7);

  QuadratureScheme tight = cfg.quadrature;
  tight.tol = std::min(tight.tol, 1e-11);
  const ExpansionCoeffCheck g = g01_check(p, cfg.t, tight);
  cl.add("quadrature_weight.expansion_coefficients", std::max(g.g0.abs_error(), g.g1.abs_error()), 1e-7);
  for (double z : {0.0, 0.3})
    cl.add("quadrature_weight.sec_integral", sec_integral_check(p.lambda(), z, tight).abs_error(), 1e-7);

  const double X = choose_half_width(p, 0, tight.tol);
  const QuadratureResult mass =
      integrate_interval([&](double x) { return Complex(normalized_weight(p, x)); }, -X, X, tight);
  cl.add("quadrature_weight.normalized_mass", std::abs(mass.value - 1.0), 1e-9);
}

void recursion_checks(CheckList& cl, Uniform& u, const RunConfig& cfg, const MPParams& p) {
  for (int i = 0; i < 5; ++i) {
    const Complex x{u(-3.0, 3.0), u(-0.5, 0.5)};
    const Complex y0{u(-1.0, 1.0), u(-1.0, 1.0)};
    const Complex y1{u(-1.0, 1.0), u(-1.0, 1.0)};
    const Complex t = 0.2 * std::exp(kI * u(0.0, 2.0 * kPi));
    cl.add("recursion_asymptotics.general_generating_function", gf_identity_check(p, x, y0, y1, t, 80).abs_error(),
           1e-8);
    cl.add("recursion_asymptotics.numerator_generating_function",
           gf_identity_check(p, x, 0.0, 2.0 * std::sin(p.phi()), t, 80).abs_error(), 1e-8);
  }
  const double x0 = cfg.x.front();
  const double d1 = darboux_envelope(p, x0, 100);
  const double d2 = darboux_envelope(p, x0, 200);
  const double d3 = darboux_envelope(p, x0, 400);
  cl.add("recursion_asymptotics.darboux_envelope", d3, 5e-2, d2 < d1 && d3 < d2);
}

void second_kind_checks(CheckList& cl, Uniform& u, const RunConfig& cfg, const MPParams& p) {
  const double re = u(-1.0, 1.0);
  const QuadratureScheme& q = cfg.quadrature;
  for (double im : {0.5, 1.0, 2.0}) {
    const Complex z{re, im};
    const SecondKindEval ev = q_recurrence(p, z, 8, q);
    for (int n = 0; n <= 8; ++n)
      cl.add("second_kind.recurrence_vs_integral", rel(ev.values[n], q_integral(p, z, n, q)), 1e-6);
    cl.add("second_kind.closed_form_q0", rel(q0_closed(p, z), ev.values[0]), 1e-6);
    if (im >= kCauchyGuard + 0.5 && p.lambda() > 0.5) {
      for (int n = 0; n <= 4; ++n) {
        const SecondKindRelations r = lowering_raising_q(p, z, n, q);
        if (r.lowering) cl.add("second_kind.lowering", r.lowering->rel_error(), 1e-6);
        cl.add("second_kind.raising", r.raising.rel_error(), 1e-6);
      }
    }
  }
  for (int n = 0; n <= 3; ++n)
    cl.add("second_kind.rodrigues", rodrigues_check(p, Complex(re, 2.0), n, q).rel_error(), 1e-5);

  const Complex big{0.0, 50.0};
  const double mean = -p.lambda() / std::tan(p.phi());
  const Complex scaled = big * weighted_cauchy(p, big, 0, q) / orthogonality_norm(p, 0);
  cl.add("second_kind.mass_limit", std::abs(scaled - (1.0 + mean / big)), 1e-3);
  cl.add("second_kind.stieltjes_ratio", stieltjes_ratio_check(p, Complex(re, 1.0), 400).rel_error(), 1e-3);
}

void sturm_liouville_checks(CheckList& cl, const RunConfig& cfg, const MPParams& p) {
  const QuadratureScheme& q = cfg.quadrature;
  const auto battery = gaussian_hermite_battery();
  const MPParams hi = p.shifted(0.5);
  const StripFunction ratio{[=](Complex z) { return weight_analytic(hi, z) / weight_analytic(p, z); },
                            p.lambda() + 0.4};
  const StripFunction coefficients[] = {StripFunction::entire([](Complex) { return Complex(1.0); }),
                                        windowed_quadratic(), ratio};
  for (const auto& pair : battery) {
    cl.add("sturm_liouville.antisymmetry", antisymmetry_check(pair.f, pair.g, q), 1e-8);
    for (const auto& pc : coefficients) {
      const SLOperator op{[](double) { return 1.0; }, pc};
      for (const auto* f : {&pair.f, &pair.g})
        cl.add("sturm_liouville.positivity", std::max(0.0, -positivity_check(op, *f, q)), 1e-10);
    }
    for (const auto& pc : {windowed_quadratic(), ratio})
      cl.add("sturm_liouville.operator_symmetry", std::abs(sl_symmetry_residual(pc, pair.f, pair.g, q)), 1e-8);
  }
}

// ---------------------------------------------------------------- commands

Outcome do_eval(const RunConfig& cfg) {
  Outcome o;
  CheckList cl;
  json rows = json::array();
  for (double x : cfg.x) {
    Complex v;
    if (cfg.theta) {
      v = eval_generalized(GenMPParams(cfg.lambda, *cfg.theta, *cfg.psi), x, cfg.n);
    } else {
      const MPParams p(cfg.lambda, cfg.phi);
      v = mp_value(p, x, cfg.n);
      cl.add("polynomials.three_route_agreement",
             std::max(rel(v, eval_hyp(p, x, cfg.n)), rel(v, eval_sum(p, x, cfg.n))), 1e-10);
    }
    rows.push_back({{"x", x}, {"value", to_json(v)}});
    o.text.push_back("P_" + std::to_string(cfg.n) + " = " + fmt(v) + " at x = " + fmt(x));
  }
  o.values["P_n"] = rows;
  o.checks = cl.sorted();
  return o;
}

Outcome do_table(const RunConfig& cfg) {
  Outcome o;
  const MPParams p(cfg.lambda, cfg.phi);
  std::ostringstream csv;
  csv << "n,x,P_n,P*_n\n";
  json rows = json::array();
  for (double x : cfg.x) {
    const PolySequence pn = eval_recurrence(p, x, cfg.N);
    const PolySequence qn = numerator_recurrence(p, x, cfg.N);
    for (int n = 0; n <= cfg.N; ++n) {
      csv << n << ',' << fmt(x) << ',' << fmt(pn[n].real()) << ',' << fmt(qn[n].real()) << '\n';
      rows.push_back({{"n", n}, {"x", x}, {"P_n", pn[n].real()}, {"P*_n", qn[n].real()}});
      o.text.push_back("n = " + std::to_string(n) + "  x = " + fmt(x) + "  P_n = " + fmt(pn[n].real()) +
                       "  P*_n = " + fmt(qn[n].real()));
    }
  }
  o.csv = csv.str();
  o.values["table"] = rows;
  return o;
}

Outcome do_ortho(const RunConfig& cfg) {
  Outcome o;
  CheckList cl;
  const GramMatrix g = orthogonality_matrix(MPParams(cfg.lambda, cfg.phi), cfg.N, cfg.quadrature);
  json m = json::array();
  for (int i = 0; i <= g.N; ++i) {
    json row = json::array();
    std::string line;
    for (int j = 0; j <= g.N; ++j) {
      row.push_back(g.at(i, j));
      char buf[32];
      std::snprintf(buf, sizeof buf, "%11.3e", g.at(i, j));
      line += buf;
    }
    m.push_back(row);
    o.text.push_back(line);
  }
  o.text.push_back("max off-diagonal = " + fmt(g.max_offdiag()));
  o.text.push_back("max diagonal deviation = " + fmt(g.max_diag_deviation()));
  o.values["gram_matrix"] = m;
  o.values["max_offdiag"] = g.max_offdiag();
  o.values["max_diag_deviation"] = g.max_diag_deviation();
  cl.add("quadrature_weight.orthogonality", std::max(g.max_offdiag(), g.max_diag_deviation()), 1e-7);
  o.checks = cl.sorted();
  return o;
}

Outcome do_expand(const RunConfig& cfg) {
  Outcome o;
  CheckList cl;
  const MPParams p(cfg.lambda, cfg.phi);
  const ExpansionCoeffs g = expansion_coeffs(p, cfg.t, cfg.N);
  json coeffs = json::array();
  for (const Complex c : g.coeffs) coeffs.push_back(to_json(c));
  o.values["g_n"] = coeffs;
  json partial = json::array();
  for (double x : cfg.x) {
    const Complex target = e_closed(x, cfg.t);
    const Complex sum = plane_wave_partial(p, x, cfg.t, cfg.N);
    partial.push_back({{"x", x}, {"partial_sum", to_json(sum)}, {"E", to_json(target)}});
    o.text.push_back("x = " + fmt(x) + "  partial sum = " + fmt(sum) + "  E = " + fmt(target));
    cl.add("plane_wave.expansion_convergence", std::abs(sum - target), 1e-8);
  }
  o.values["expansion"] = partial;
  QuadratureScheme tight = cfg.quadrature;
  tight.tol = std::min(tight.tol, 1e-11);
  const ExpansionCoeffCheck gc = g01_check(p, cfg.t, tight);
  cl.add("quadrature_weight.expansion_coefficients", std::max(gc.g0.abs_error(), gc.g1.abs_error()), 1e-7);
  o.checks = cl.sorted();
  return o;
}

Outcome do_second_kind(const RunConfig& cfg) {
  Outcome o;
  CheckList cl;
  const MPParams p(cfg.lambda, cfg.phi);
  const Complex z{cfg.x.front(), cfg.z_im};
  const SecondKindEval ev = q_recurrence(p, z, cfg.N, cfg.quadrature);
  json rows = json::array();
  for (int n = 0; n <= cfg.N; ++n) {
    const Complex qi = q_integral(p, z, n, cfg.quadrature);
    const Complex qr = ev.values[static_cast<std::size_t>(n)];
    rows.push_back({{"n", n}, {"Q_integral", to_json(qi)}, {"Q_recurrence", to_json(qr)}});
    o.text.push_back("Q_" + std::to_string(n) + " = " + fmt(qi) + "  (recurrence " + fmt(qr) + ")");
    cl.add("second_kind.recurrence_vs_integral", rel(qi, qr), 1e-6);
  }
  const Complex closed = q0_closed(p, z);
  o.text.push_back("Q_0 closed form = " + fmt(closed));
  cl.add("second_kind.closed_form_q0", rel(closed, ev.values[0]), 1e-6);
  o.values["z"] = to_json(z);
  o.values["Q"] = rows;
  o.values["Q0_closed"] = to_json(closed);
  o.values["amplification"] = ev.amplification;
  o.values["unstable"] = ev.unstable;
  o.checks = cl.sorted();
  return o;
}

Outcome do_asympt(const RunConfig& cfg) {
  Outcome o;
  CheckList cl;
  const MPParams p(cfg.lambda, cfg.phi);
  const int base = std::max(cfg.N, 1);
  json rows = json::array();
  for (double x : cfg.x) {
    const double d1 = darboux_envelope(p, x, base);
    const double d2 = darboux_envelope(p, x, 2 * base);
    const double d3 = darboux_envelope(p, x, 4 * base);
    rows.push_back({{"x", x}, {"n", {base, 2 * base, 4 * base}}, {"envelope", {d1, d2, d3}}});
    o.text.push_back("x = " + fmt(x) + "  envelope(" + std::to_string(base) + ", " + std::to_string(2 * base) +
                     ", " + std::to_string(4 * base) + ") = " + fmt(d1) + ", " + fmt(d2) + ", " + fmt(d3));
    cl.add("recursion_asymptotics.darboux_envelope", d3, 5e-2, d2 < d1 && d3 < d2);
    const double s1 = l2_divergence_witness(p, x, 2 * base);
    const double s2 = l2_divergence_witness(p, x, 4 * base);
    o.text.push_back("x = " + fmt(x) + "  S_2N / S_N = " + fmt(s2 / s1));
    rows.back()["witness_ratio"] = s2 / s1;
  }
  o.values["asymptotics"] = rows;
  o.checks = cl.sorted();
  return o;
}

Outcome do_verify(const RunConfig& cfg) {
  Outcome o;
  o.checks = verify_battery(cfg);
  return o;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "json";
}

json params_json(const RunConfig& cfg) {
  json p = {{"lambda", cfg.lambda}, {"phi", cfg.phi}, {"n", cfg.n},       {"N", cfg.N},
            {"x", cfg.x},           {"t", cfg.t},     {"z_im", cfg.z_im}, {"seed", cfg.seed},
            {"format", format_name(cfg.format)}};
  if (cfg.theta) p["theta"] = *cfg.theta;
  if (cfg.psi) p["psi"] = *cfg.psi;
  p["quadrature"] = {{"half_width", cfg.quadrature.half_width},
                     {"panels", cfg.quadrature.panels},
                     {"nodes", cfg.quadrature.nodes_per_panel},
                     {"tol", cfg.quadrature.tol}};
  return p;
}

std::string render(const RunConfig& cfg, const Outcome& o, double seconds) {
  if (cfg.format == Format::csv) return o.csv;
  if (cfg.format == Format::text) {
    std::ostringstream out;
    for (const auto& line : o.text) out << line << '\n';
    for (const auto& c : o.checks) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-52s %10.3e  tol %8.1e  %s", c.check.c_str(), c.max_error, c.tolerance,
                    c.pass ? "PASS" : "FAIL");
      out << buf << '\n';
    }
    if (cfg.timing) out << "wall time " << fmt(seconds) << " s\n";
    return out.str();
  }
  json results = json::array();
  for (const auto& c : o.checks)
    results.push_back({{"check", c.check}, {"max_error", c.max_error}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  json doc = {{"command", command_name(cfg.command)}, {"params", params_json(cfg)}, {"results", results}};
  if (!o.values.empty()) doc["values"] = o.values;
  doc["timing"] = cfg.timing ? json{{"wall_seconds", seconds}} : json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::eval: return "eval";
    case Command::table: return "table";
    case Command::ortho: return "ortho";
    case Command::expand: return "expand";
    case Command::second_kind: return "second-kind";
    case Command::asympt: return "asympt";
    case Command::verify: return "verify";
  }
  return "verify";
}

void RunConfig::validate() const {
  try {
    MPParams(lambda, phi);
    if (theta.has_value() != psi.has_value()) throw ValidationError("--theta and --psi go together");
    if (theta) GenMPParams(lambda, *theta, *psi);
    quadrature.validate();
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (n < 0 || n > kMaxDegree) throw ValidationError("--n must lie in [0, " + std::to_string(kMaxDegree) + "]");
  if (N < 0 || N > kMaxDegree) throw ValidationError("--N must lie in [0, " + std::to_string(kMaxDegree) + "]");
  if (command == Command::ortho && N > 25) throw ValidationError("ortho: --N must be <= 25");
  if (command == Command::asympt && 4 * N > kMaxDegree) throw ValidationError("asympt: 4 N must not exceed the degree cap");
  if (x.empty()) throw ValidationError("--x needs at least one value");
  for (double v : x)
    if (!std::isfinite(v)) throw ValidationError("--x values must be finite");
  if (!std::isfinite(t)) throw ValidationError("--t must be finite");
  if ((command == Command::expand || command == Command::verify) && std::abs(t) > 0.5)
    throw ValidationError("--t must satisfy |t| <= 0.5");
  if (command == Command::second_kind && !(std::abs(z_im) >= kCauchyGuard))
    throw ValidationError("--z-im must satisfy |z-im| >= " + fmt(kCauchyGuard));
  if (format == Format::csv && command != Command::table) throw ValidationError("csv output is only for table");
  if (theta && command != Command::eval) throw ValidationError("--theta/--psi only apply to eval");
}

std::vector<CheckResult> verify_battery(const RunConfig& cfg) {
  const MPParams p(cfg.lambda, cfg.phi);
  Uniform u(cfg.seed);
  CheckList cl;
  foundations_checks(cl, u);
  polynomial_checks(cl, u, p);
  t_calculus_checks(cl, u, p);
  plane_wave_checks(cl, u, cfg, p);
  quadrature_checks(cl, cfg, p);
  recursion_checks(cl, u, cfg, p);
  second_kind_checks(cl, u, cfg, p);
  sturm_liouville_checks(cl, cfg, p);
  return cl.sorted();
}

Report run(const RunConfig& config) {
  try {
    config.validate();
  } catch (const ValidationError& e) {
    return {kExitInvalid, std::string("invalid configuration: ") + e.what() + "\n"};
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    switch (config.command) {
      case Command::eval: o = do_eval(config); break;
      case Command::table: o = do_table(config); break;
      case Command::ortho: o = do_ortho(config); break;
      case Command::expand: o = do_expand(config); break;
      case Command::second_kind: o = do_second_kind(config); break;
      case Command::asympt: o = do_asympt(config); break;
      case Command::verify: o = do_verify(config); break;
    }
  } catch (const ConvergenceError& e) {
    return {kExitNonConvergence, std::string("non-convergence: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInvalid, std::string("domain error: ") + e.what() + "\n"};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool all_pass = std::all_of(o.checks.begin(), o.checks.end(), [](const CheckResult& c) { return c.pass; });
  return {all_pass ? kExitOk : kExitChecksFailed, render(config, o, seconds)};
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Meixner-Pollaczek polynomials: evaluation, tables and identity checks", "meixner"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.fallthrough();
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  double theta = 0.0;
  double psi = 0.0;
  app.add_option("--lambda", cfg.lambda, "lambda > 0");
  app.add_option("--phi", cfg.phi, "phi in (0, pi)");
  auto* theta_opt = app.add_option("--theta", theta, "generalized family parameter");
  auto* psi_opt = app.add_option("--psi", psi, "generalized family parameter");
  app.add_option("--n", cfg.n, "degree");
  app.add_option("--N", cfg.N, "largest degree / matrix size");
  app.add_option("--x", cfg.x, "evaluation points (comma separated)")->delimiter(',');
  app.add_option("--t", cfg.t, "plane-wave parameter");
  app.add_option("--z-im", cfg.z_im, "imaginary part of z for second-kind functions");
  app.add_option("--panels", cfg.quadrature.panels, "starting panel count");
  app.add_option("--nodes", cfg.quadrature.nodes_per_panel, "Gauss-Legendre nodes per panel");
  app.add_option("--half-width", cfg.quadrature.half_width, "truncation X of the real line (0 = automatic)");
  app.add_option("--tol", cfg.quadrature.tol, "quadrature tolerance");
  app.add_option("--format", cfg.format, "json, csv or text")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_flag("--timing", cfg.timing, "include wall time in the report");

  const std::pair<const char*, Command> commands[] = {
      {"eval", Command::eval},     {"table", Command::table},   {"ortho", Command::ortho},
      {"expand", Command::expand}, {"second-kind", Command::second_kind},
      {"asympt", Command::asympt}, {"verify", Command::verify}};
  const char* help[] = {"P_n at the given points",
                        "CSV-ready table of P_n and P*_n",
                        "normalized Gram matrix of P_0..P_N",
                        "plane-wave expansion coefficients and partial sums",
                        "second-kind functions Q_n at x + i z_im",
                        "large-n asymptotics against the recurrence",
                        "full identity battery"};
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    const Command c = commands[i].second;
    app.add_subcommand(commands[i].first, help[i])->callback([&cfg, c] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }
  if (theta_opt->count() > 0) cfg.theta = theta;
  if (psi_opt->count() > 0) cfg.psi = psi;

  const Report r = run(cfg);
  (r.exit_code == kExitInvalid || r.exit_code == kExitNonConvergence ? err : out) << r.output;
  return r.exit_code;
}

}  // namespace meixner::cli
