#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "igm/error.hpp"
#include "igm/prm.hpp"
#include "matrix_io.hpp"

namespace igm::cli {

/// Process exit codes. Every failure path maps to exactly one of these.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitUsage = 2,       // bad flags, parse and validation errors
  kExitNumerical = 3,   // SingularMatrix, ZeroShiftOnConsistent, NoConvergence, Infeasible
  kExitDiscrepancy = 4, // a simulation found a nonzero discrepancy
  kExitIo = 5,          // unreadable input, unwritable output
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) noexcept;

struct SolveOptions {
  std::filesystem::path input;
  std::optional<MatrixFormat> format;
  std::string method = "pigm";
  /// NIGM shift (default 1) or LIGM shift (default 0).
  std::optional<double> r;
  /// Direction-order seed for the WLS optimizer.
  std::uint64_t seed = 0;
};

struct SolveOutput {
  std::string label;
  std::vector<double> weights;
  std::optional<double> lambda;
  double wls_objective = 0.0;
  ConsistencyReport consistency;
  std::vector<std::string> warnings;
};

SolveOutput run_solve(const PairwiseReciprocalMatrix& prm, const SolveOptions& opts);
SolveOutput run_solve(const SolveOptions& opts);

/// Human table, values at 3 decimal places.
std::string render_table(const SolveOutput& out);
/// Machine output, values at 12 decimal places.
nlohmann::ordered_json to_json(const SolveOutput& out);
std::string render_json(const SolveOutput& out);

/// Entry point behind the igm executable.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace igm::cli
