#ifndef SSIG_INTERCHANGE_HPP
#define SSIG_INTERCHANGE_HPP

#include <cstdint>
#include <vector>

#include "ssig/report.hpp"
#include "ssig/rng.hpp"
#include "ssig/spectral.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Greedy sample-interchange engine: swaps preserve the value multiset
// exactly while the autocorrelation mismatch decreases monotonically.
class InterchangeState {
 public:
  InterchangeState(Signal x, const TargetAutocorr& target, const MetricConfig& metric,
                   std::uint64_t resync_accepted_interval = 1'000'000);

  // One proposal: draw i, then j until j != i, evaluate the swapped
  // autocorrelation in O(m) and accept iff the metric strictly decreases.
  // Returns whether the swap was accepted.
  bool propose_and_maybe_swap(const TargetAutocorr& target, const MetricConfig& metric,
                              Rng& rng);

  const Signal& signal() const { return x_; }
  const AutocorrEstimate& autocorr() const { return ax_; }
  double current_metric() const { return current_d_; }

  // Mutable access for interleaved optimizers that edit the signal between
  // swap bursts. After any in-place edit, call refresh() to rebuild the
  // cached autocorrelation and metric from scratch; the incremental swap
  // bookkeeping is only valid against an up-to-date cache.
  Signal& signal_for_update() { return x_; }
  void refresh(const TargetAutocorr& target, const MetricConfig& metric);
  std::uint64_t accepted() const { return accepted_; }
  std::uint64_t proposed() const { return proposed_; }

  Signal take_signal() && { return std::move(x_); }

 private:
  void resync(const TargetAutocorr& target, const MetricConfig& metric);

  Signal x_;
  AutocorrEstimate ax_;
  double current_d_;
  std::uint64_t accepted_ = 0;
  std::uint64_t proposed_ = 0;
  std::uint64_t resync_interval_;
  std::uint64_t accepted_since_resync_ = 0;
  std::vector<double> scratch_;  // candidate autocorrelation, no per-proposal alloc
};

// Full engine run: inverse-transform initialization from the tabulated PDF,
// then cfg.steps proposals (or a wall-clock budget), tracing the metric.
// If initial_out is non-null it receives a copy of the initial signal.
RunReport run_interchange(const TargetAutocorr& target, const ExactPdf& pdf, std::size_t n,
                          const RunConfig& cfg, const MetricConfig& metric, Rng& rng,
                          Signal* initial_out = nullptr);

}  // namespace ssig

#endif  // SSIG_INTERCHANGE_HPP
