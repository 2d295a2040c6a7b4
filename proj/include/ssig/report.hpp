#ifndef SSIG_REPORT_HPP
#define SSIG_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssig/optim.hpp"
#include "ssig/types.hpp"

namespace ssig {

enum class Mode { Interchange, OptimizationOnly, Combined };

// Trace timestamps: wall-clock for convergence-vs-time plots, or a constant
// zero so that re-running a config byte-reproduces the trace file.
enum class TraceClock { Wall, None };

struct RunConfig {
  std::uint64_t steps = 0;           // outer steps (Combined) or proposals (Interchange)
  Mode mode = Mode::Combined;
  std::uint64_t swaps_per_gradient_step = 1;
  std::uint64_t rng_seed = 0;
  AdamParams adam;
  std::uint64_t trace_interval = 1000;
  double budget_seconds = 0.0;       // > 0: stop on wall clock instead of steps
  TraceClock trace_clock = TraceClock::Wall;
  std::uint64_t resync_accepted_interval = 1'000'000;  // full A_x recompute cadence
  bool init_from_pdf = false;        // Combined/OptimizationOnly: sample the init from an ExactPdf
  double init_sigma = 0.0;           // 0 = auto: (upper - lower) / 4 of the range penalty
  std::size_t cdf_grid = 4096;       // tabulation size for inverse transform sampling
  std::size_t stationarity_windows = 16;
};

struct TraceEntry {
  double elapsed_seconds = 0.0;
  std::uint64_t step = 0;
  double metric_d = 0.0;
  double total_loss = 0.0;  // metric + penalty; equals metric_d for Interchange
};

struct RunReport {
  Signal final_signal;
  std::vector<TraceEntry> trace;
  double final_metric = 0.0;
  double vaf_percent = 0.0;
  std::optional<StationarityScore> stationarity = std::nullopt;  // empty for degenerate signals
  double total_seconds = 0.0;
  std::uint64_t steps_run = 0;
  std::uint64_t swaps_proposed = 0;
  std::uint64_t swaps_accepted = 0;
};

}  // namespace ssig

#endif  // SSIG_REPORT_HPP
