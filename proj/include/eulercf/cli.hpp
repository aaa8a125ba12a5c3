#pragma once

// Command-line surface: eval, table, verify and bench. Everything is
// reachable in-process through run() so the exit-code contract can be
// tested without spawning the binary.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulercf/engine.hpp"
#include "eulercf/verify.hpp"

namespace eulercf::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;  // also domain errors
inline constexpr int not_converged = 2;
inline constexpr int verification_failed = 3;
}  // namespace exit_code

enum class OutputFormat { text, csv, json };

struct RunConfig {
  std::string family;
  /// name -> value as typed; "p/q" values select exact mode where supported.
  std::vector<std::pair<std::string, std::string>> parameters;
  double tol = 1e-13;
  std::size_t max_depth = kDefaultMaxDepth;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
};

struct TableRow {
  std::size_t depth = 0;
  double convergent = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
};

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One row per depth in [first, last] against the family's left member.
std::vector<TableRow> table_rows(const RunConfig& config, std::size_t first, std::size_t last);
int cmd_table(const RunConfig& config, std::size_t first, std::size_t last, std::ostream& out, std::ostream& err);

/// Renders a finished suite; exit 3 with the first failing case on stderr.
int report_suite(const SuiteReport& report, int bound, const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_verify(std::string_view suite, int bound, const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_bench(const RunConfig& config, std::string_view comparator, std::size_t repeats, std::ostream& out,
              std::ostream& err);

/// Parses and dispatches a full command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulercf::cli
