#pragma once

// Command-line front end. Every command writes CSV or JSON to a file or to
// stdout; failures print a JSON error object to stderr and map to an exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osc/coherent.hpp"
#include "osc/wavefunctions.hpp"

namespace osc::cli {

enum class Command { Spectrum, Rep, Verify, Coherent, Wavefunction, Evolve, Degeneracy };
enum class Format { Csv, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitConvergence = 3,
  kExitInvariant = 4,
};

std::string_view command_name(Command command);

struct GridSpec {
  std::optional<double> r_min;
  std::optional<double> r_max;
  double step = kDefaultGridStep;
};

struct TimeSpec {
  double t_start = 0.0;
  std::optional<double> t_end;  // default: one period pi / omega after t_start
  int frames = 16;
};

struct RunConfig {
  Command command = Command::Spectrum;
  int dim = 3;
  int ell = 0;
  double omega = 1.0;
  Complex k{1.0, 0.0};
  std::optional<int> n_max;  // default_n_max() when unset; n_tilde_max for degeneracy
  int n_count = 10;
  std::optional<int> level;  // wavefunction: energy eigenfunction n instead of a coherent state
  GridSpec grid;
  TimeSpec times;
  std::string output;  // empty: stdout
  std::optional<Format> format;  // default: json for verify, csv otherwise
};

/// "re,im" or a bare real.
Complex parse_complex(std::string_view text);

/// kDefaultNMax unless OSC_NMAX_DEFAULT holds a positive integer.
int default_n_max();

inline constexpr int kDefaultDegeneracyMax = 14;

/// Throws ValidationError when the config does not meet the command's preconditions.
void validate(const RunConfig& config);

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  AlgebraParams params;
  int n_max = 0;
  Complex k;
  std::vector<Check> checks;

  bool overall() const;
};

/// Every invariant that applies to (N, l), at truncation n_max and label k.
VerifyReport verify(const AlgebraParams& params, int n_max, Complex k);

/// Runs a validated config, writing to `out`. Returns the exit code; throws
/// the library errors on failure.
int run(const RunConfig& config, std::ostream& out);

/// Parses argv, runs, and reports errors as JSON on `err`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osc::cli
