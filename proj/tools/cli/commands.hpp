#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abconv/io/report.hpp"

namespace abconv::cli {

struct Options {
  std::vector<std::string> inputs;
  std::string csv;
  std::string json;
  std::string mode = "exact";
  std::string tol;
  std::uint64_t seed = 42;
  int max_dim = 4;
  std::string grid;
  std::string point;
  std::string eps;
  std::string matrix;
  std::string suite = "all";
  bool biconjugate = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;
inline constexpr int kCheckFailed = 3;

struct Outcome {
  io::Report report;
  std::vector<std::pair<std::string, std::string>> table;
  std::optional<std::string> csv;
  int exit_code = kOk;
};

/// Thrown for command-line misuse; reported as an input error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Library and parse errors propagate to the caller.
Outcome run_command(const std::string& name, const Options& opts);

}  // namespace abconv::cli
