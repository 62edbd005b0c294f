#pragma once

// Named suites of identity checks with structured counterexamples.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symq/partition.hpp"

namespace symq {

/// One failed instance. lambda, mu and params are enough to rerun it alone.
struct CheckFailure {
  std::string identity;
  Partition lambda;
  Partition mu;
  std::string params;
  std::string got;
  std::string expected;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;            // as requested
  int effective_max_n = 0;  // after the per-suite cap
  long checks_run = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0;

  bool pass() const { return failures.empty(); }
};

/// Suites in the order run_all uses.
const std::vector<std::string>& suite_names();

/// Largest n a suite runs at; larger requests are clamped with a warning.
int suite_cap(const std::string& name);

/// Throws std::invalid_argument for an unknown suite or negative max_n.
/// jobs > 1 evaluates instances on that many threads; the report does not
/// depend on it apart from elapsed_ms.
SuiteReport run_suite(const std::string& name, int max_n, int jobs = 1);

std::vector<SuiteReport> run_all(int max_n, int jobs = 1);

/// Seed for the sampled checks (hopf, big-schur).
inline constexpr std::uint64_t kSuiteSeed = 20240611;

}  // namespace symq
