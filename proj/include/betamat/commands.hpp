#pragma once

// The gen / analyze / verify commands behind the command-line tool, as plain
// functions producing Reports.

#include "betamat/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace betamat {

/// Bad command input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct GenRequest {
  std::string kind;  // beta, beta-recip, pascal-hinv, k, a, b, d1, d2, generalized
  std::optional<long> n;
  std::optional<std::string> lambdas;
  std::optional<std::string> mus;
  long m = 1;
};

struct VerifyRequest {
  std::string theorem;
  std::optional<long> n;
  std::optional<long> n_max;
  std::uint64_t seed = 42;
  std::optional<std::size_t> samples;
  std::optional<std::string> lambdas;
  std::optional<std::string> mus;
  long m = 1;
};

struct CommandResult {
  Report report;
  int exit_code = kExitPass;
};

const std::vector<std::string>& gen_kinds();
const std::vector<std::string>& verify_theorems();

Matrix generate(const std::string& kind, long n);

CommandResult run_gen(const GenRequest& request);
/// Analyzes beta_matrix(n) or an explicit matrix (exactly one must be given).
CommandResult run_analyze(std::optional<long> n, const std::optional<Matrix>& matrix, const std::string& source);
CommandResult run_verify(const VerifyRequest& request);

/// Flat CSV rendering for gen and analyze; throws UsageError otherwise.
std::string report_to_csv(const Report& report);

/// Reads a matrix from a .csv file or a JSON file (array of rows, or an
/// object with a "matrix" field).
Matrix load_matrix_file(const std::string& path);

}  // namespace betamat
