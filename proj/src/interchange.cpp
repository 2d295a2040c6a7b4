#include "ssig/interchange.hpp"

#include <stdexcept>
#include <utility>

#include "ssig/sampling.hpp"
#include "run_common.hpp"

namespace ssig {

InterchangeState::InterchangeState(Signal x, const TargetAutocorr& target,
                                   const MetricConfig& metric,
                                   std::uint64_t resync_accepted_interval)
    : x_(std::move(x)),
      ax_(autocorr_fft(x_, target.lags())),
      current_d_(metric_d(target, ax_, metric)),
      resync_interval_(resync_accepted_interval == 0 ? 1 : resync_accepted_interval),
      scratch_(target.lags()) {
  if (target.lags() > x_.size()) {
    throw std::invalid_argument("InterchangeState: lag window exceeds signal length");
  }
}

void InterchangeState::resync(const TargetAutocorr& target, const MetricConfig& metric) {
  ax_ = autocorr_fft(x_, target.lags());
  current_d_ = metric_d(target, ax_, metric);
  accepted_since_resync_ = 0;
}

void InterchangeState::refresh(const TargetAutocorr& target, const MetricConfig& metric) {
  resync(target, metric);
}

bool InterchangeState::propose_and_maybe_swap(const TargetAutocorr& target,
                                              const MetricConfig& metric, Rng& rng) {
  const std::size_t n = x_.size();
  const std::size_t i = static_cast<std::size_t>(rng.uniform_below(n));
  std::size_t j = static_cast<std::size_t>(rng.uniform_below(n));
  while (j == i) j = static_cast<std::size_t>(rng.uniform_below(n));
  ++proposed_;

  auto& v = x_.values();
  swap_delta_into(v, ax_.values, i, j, scratch_);
  const double candidate_d = metric_d(target.values(), scratch_, metric.weights);

  if (!(candidate_d < current_d_)) return false;  // strict decrease only

  std::swap(v[i], v[j]);
  ax_.values.swap(scratch_);
  current_d_ = candidate_d;
  ++accepted_;
  if (++accepted_since_resync_ >= resync_interval_) {
    // Incremental float updates drift; periodically rebuild from scratch.
    resync(target, metric);
  }
  return true;
}

RunReport run_interchange(const TargetAutocorr& target, const ExactPdf& pdf, std::size_t n,
                          const RunConfig& cfg, const MetricConfig& metric, Rng& rng,
                          Signal* initial_out) {
  if (target.lags() > n) {
    throw std::invalid_argument("run_interchange: lag window exceeds signal length");
  }

  detail::RunTimer timer;
  const TabulatedCdf cdf = integrate_pdf(pdf, cfg.cdf_grid);
  Signal x = inverse_transform_sample(cdf, n, rng);
  if (initial_out) *initial_out = x;

  InterchangeState state(std::move(x), target, metric, cfg.resync_accepted_interval);

  const std::uint64_t interval = cfg.trace_interval == 0 ? 1 : cfg.trace_interval;
  const bool budgeted = cfg.budget_seconds > 0.0;

  std::vector<TraceEntry> trace;
  trace.push_back({detail::trace_time(timer, cfg.trace_clock), 0, state.current_metric(),
                   state.current_metric()});

  std::uint64_t step = 0;
  while (true) {
    if (budgeted) {
      if (cfg.steps > 0 && step >= cfg.steps) break;
      // Budget polling every 1024 proposals keeps the clock off the hot path.
      if ((step & 1023u) == 0 && timer.elapsed() >= cfg.budget_seconds) break;
    } else if (step >= cfg.steps) {
      break;
    }
    ++step;
    state.propose_and_maybe_swap(target, metric, rng);
    if (step % interval == 0) {
      trace.push_back({detail::trace_time(timer, cfg.trace_clock), step,
                       state.current_metric(), state.current_metric()});
    }
  }

  // Report exact final numbers, not incrementally maintained ones; the last
  // trace entry reflects the recomputed value too.
  state.refresh(target, metric);

  if (trace.back().step == step) {
    trace.back().metric_d = state.current_metric();
    trace.back().total_loss = state.current_metric();
  } else {
    trace.push_back({detail::trace_time(timer, cfg.trace_clock), step, state.current_metric(),
                     state.current_metric()});
  }

  const double final_metric = state.current_metric();
  const std::uint64_t proposed = state.proposed();
  const std::uint64_t accepted = state.accepted();
  const AutocorrEstimate ax = state.autocorr();

  RunReport report{.final_signal = std::move(state).take_signal(),
                   .trace = std::move(trace),
                   .final_metric = final_metric,
                   .steps_run = step,
                   .swaps_proposed = proposed,
                   .swaps_accepted = accepted};
  detail::finalize_report(report, target, ax, cfg.stationarity_windows);
  report.total_seconds = timer.elapsed();
  return report;
}

}  // namespace ssig
