#ifndef SSIG_CLI_HPP
#define SSIG_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssig/optim.hpp"
#include "ssig/report.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Config-layer failure (parse error, missing key, invalid value). The
// command wrappers map this to exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output file paths from the config's `output` section; empty string means
// the file is not written. All relative paths resolve against the config
// file's directory.
struct OutputPaths {
  std::string signal_csv;
  std::string signal_bin;
  std::string trace_csv;
  std::string quantiles_csv;
  std::string initial_csv;  // debug: dump of the pre-run initial signal
};

// Scaling sweep: times one gradient step and one swap proposal per n and
// fits log-log slopes. The sweep always uses a fresh exponential-decay
// target (shape does not affect timing) with the lag count fixed at m.
struct SweepConfig {
  std::vector<std::size_t> n_values{4096, 16384, 65536, 262144};
  std::size_t m = 512;
  double power = 0.2;
  double tau = 100.0;
  double min_seconds_per_point = 0.25;
};

struct BenchmarkConfig {
  std::vector<Mode> modes;
  std::vector<std::uint64_t> seeds;
  std::uint64_t steps = 0;        // shared step count; 0 when budget-driven
  double budget_seconds = 0.0;    // shared wall budget; 0 when step-driven
  std::vector<double> thresholds; // metric levels for time-to-threshold columns
  bool parallel = false;          // concurrent cells trade timing comparability
  std::string output_dir;         // per-cell trace CSVs land here; empty = skip
  std::optional<SweepConfig> sweep;
};

// Fully validated configuration for one invocation.
struct AppConfig {
  std::size_t n = 0;
  RunConfig run;  // includes mode, steps/budget, seed, optimizer parameters
  std::optional<TargetAutocorr> target;
  std::optional<ExactPdf> exact_pdf;    // required by interchange mode
  std::optional<RangePenalty> penalty;  // required by optimize/combined modes
  MetricConfig metric;
  OutputPaths out;
  std::optional<BenchmarkConfig> benchmark;
};

// Reads and parses the JSON config; parse failures become config_error with
// a "path:line:" prefix.
nlohmann::json load_config_file(const std::string& path);

// Applies "dotted.path=value" overrides in order. Values parse as JSON when
// possible (numbers, booleans, arrays) and fall back to plain strings.
void apply_overrides(nlohmann::json& cfg, const std::vector<std::string>& overrides);

// Builds the target from the config's `target` section. Families:
// exp_decay {power, tau, m}, damped_cosine {power, tau, freq, m},
// autocorr_file {path}, psd_file {path, m}.
TargetAutocorr parse_target(const nlohmann::json& section,
                            const std::filesystem::path& base_dir);

// Validates the whole config tree. With for_benchmark set, the `benchmark`
// section is required and run-mode/step settings come from it instead.
AppConfig interpret_config(const nlohmann::json& cfg, const std::filesystem::path& base_dir,
                           bool for_benchmark);

// Signal serialization. CSV: one value per line, 17 significant digits.
// Binary: magic "SSIG1", unsigned 64-bit little-endian length, then length
// little-endian IEEE-754 doubles.
void write_signal_csv(const Signal& x, const std::string& path);
void write_signal_bin(const Signal& x, const std::string& path);
Signal read_signal_bin(const std::string& path);
void write_quantiles_csv(const Signal& x, const std::string& path);

// Subcommand entry points; return the process exit code (0 success,
// 2 config/validation error, 3 numerical failure).
int cmd_generate(const std::string& config_path, const std::vector<std::string>& overrides);
int cmd_benchmark(const std::string& config_path, const std::vector<std::string>& overrides);

}  // namespace ssig

#endif  // SSIG_CLI_HPP
