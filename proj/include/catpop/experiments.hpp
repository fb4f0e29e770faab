#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catpop {

// Invalid or incomplete experiment configuration; the message names the
// offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SummaryRow {
  std::string metric;
  double value = 0.0;
  std::optional<double> expected;
  std::optional<double> tolerance;  // |value - expected| bound; empty when one-sided
  std::optional<bool> pass;
};

struct ExperimentResult {
  std::string experiment;
  std::vector<SummaryRow> summary;
  // Output file name -> contents; always contains "summary.csv".
  std::vector<std::pair<std::string, std::string>> files;
};

// Rows rendered as "metric,value,expected,tolerance,pass"; header-only when
// empty. Absent fields render as empty cells, pass renders as 1/0.
std::string summary_csv(const std::vector<SummaryRow>& rows);

// Parses and validates the JSON config text, dispatches the named experiment
// and returns the aggregated outputs. Unknown or missing keys raise
// ConfigError. Replica work is spread over `threads` workers (<= 0 means all
// cores); the outputs do not depend on the thread count.
ExperimentResult run_experiment(const std::string& config_text, int threads);

// CLI entry point: `run <config.json> [--out DIR] [--threads N]`.
// Exit codes: 0 success, 1 config error, 2 runtime failure. Partial outputs
// are removed when a run fails.
int run_cli(int argc, const char* const* argv);

// Writes result files into out_dir (created if needed); on failure removes
// whatever this call already wrote before rethrowing.
void write_result_files(const ExperimentResult& result,
                        const std::filesystem::path& out_dir);

}  // namespace catpop
