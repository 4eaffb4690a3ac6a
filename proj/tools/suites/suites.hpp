#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abconv::suites {

struct SuiteOutcome {
  std::string name;
  int criterion = 0;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;
  /// Criterion-specific counters (e.g. certified strict members).
  std::vector<std::pair<std::string, std::size_t>> notes;

  bool passed() const { return failed == 0 && instances > 0; }
};

SuiteOutcome fenchel_suite(std::uint64_t seed);
SuiteOutcome minkowski_suite(std::uint64_t seed);
SuiteOutcome separation_suite(std::uint64_t seed);
SuiteOutcome sandwich_suite(std::uint64_t seed);
SuiteOutcome calculus_suite(std::uint64_t seed);
SuiteOutcome approximation_suite(std::uint64_t seed);

/// "fenchel", "minkowski", "separation", "sandwich", "calculus",
/// "approximation".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteOutcome run_suite(const std::string& name, std::uint64_t seed);

}  // namespace abconv::suites
