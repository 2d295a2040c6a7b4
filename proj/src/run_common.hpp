#ifndef SSIG_RUN_COMMON_HPP
#define SSIG_RUN_COMMON_HPP

// Internal helpers shared by the interchange and pipeline run loops.

#include <chrono>

#include "ssig/diagnostics.hpp"
#include "ssig/report.hpp"
#include "ssig/spectral.hpp"

namespace ssig::detail {

class RunTimer {
 public:
  RunTimer() : start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline double trace_time(const RunTimer& timer, TraceClock clock) {
  return clock == TraceClock::Wall ? timer.elapsed() : 0.0;
}

// Diagnostics for the finished signal. Degenerate cases (tiny n, constant
// signal, zero-variance target) leave the optional empty / NaN rather than
// failing the run.
inline void finalize_report(RunReport& report, const TargetAutocorr& target,
                            const AutocorrEstimate& ax, std::size_t stationarity_windows) {
  try {
    report.vaf_percent = vaf(target, ax);
  } catch (const std::invalid_argument&) {
    report.vaf_percent = std::numeric_limits<double>::quiet_NaN();
  }
  std::size_t windows = stationarity_windows;
  if (windows < 2) windows = 2;
  if (report.final_signal.size() < 2 * windows) windows = report.final_signal.size() / 2;
  if (windows >= 2) {
    try {
      report.stationarity = stationarity(report.final_signal, windows);
    } catch (const std::invalid_argument&) {
      report.stationarity.reset();
    }
  }
}

}  // namespace ssig::detail

#endif  // SSIG_RUN_COMMON_HPP
