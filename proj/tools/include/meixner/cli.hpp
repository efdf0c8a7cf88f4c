#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meixner/quadrature.hpp"

namespace meixner::cli {

enum class Command { eval, table, ortho, expand, second_kind, asympt, verify };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitChecksFailed = 3;

/// Rejected configuration; nothing has been computed yet.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::verify;
  double lambda = 1.0;
  double phi = 1.5707963267948966;
  std::optional<double> theta;
  std::optional<double> psi;
  int n = 5;
  int N = 10;
  std::vector<double> x = {0.5};
  double t = 0.3;
  double z_im = 1.0;
  QuadratureScheme quadrature;
  Format format = Format::json;
  std::uint64_t seed = 0;
  bool timing = false;

  /// Throws ValidationError.
  void validate() const;
};

/// One verified identity: its name, measured error and tolerance.
struct CheckResult {
  std::string check;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  int exit_code = kExitOk;
  std::string output;
};

std::string command_name(Command c);

/// Invariant battery behind `verify`, sorted by check name. Draws come from
/// a mt19937_64 seeded with config.seed.
std::vector<CheckResult> verify_battery(const RunConfig& config);

/// Validate, compute, serialize. Never throws; failures map to exit codes
/// with the message in `output`.
Report run(const RunConfig& config);

/// Full command line (argv[0] included) to exit code; report on `out`,
/// diagnostics on `err`. Flags override values read from --config.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meixner::cli
