#pragma once

// Verification suites behind `eulercf verify`. Exact suites compare
// canonical rational functions; floating suites compare against oracles.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eulercf {

inline constexpr int kMaxVerifyBound = 24;

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool all_passed() const;
  const CaseResult* first_failure() const;
};

/// Suite identifiers: integer-n, negation, tangent-closed-forms,
/// variable-change, series-xiv.
const std::vector<std::string_view>& suite_names();

/// Runs one suite. `bound` limits |n| for the exact suites and is ignored
/// by variable-change and series-xiv; `seed` drives the randomized points.
/// Throws UsageError for an unknown suite or a bound outside 1..24.
SuiteReport run_suite(std::string_view suite, int bound, std::uint64_t seed);

}  // namespace eulercf
