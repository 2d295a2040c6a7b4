#include "ssig/pipeline.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ssig/interchange.hpp"
#include "ssig/sampling.hpp"
#include "run_common.hpp"

namespace ssig {

namespace {

Signal make_initial_signal(std::size_t n, const RunConfig& cfg, const LossConfig& loss,
                           const ExactPdf* init_pdf, Rng& rng) {
  if (cfg.init_from_pdf) {
    if (init_pdf == nullptr) {
      throw std::invalid_argument("run: init_from_pdf set but no density was given");
    }
    return inverse_transform_sample(integrate_pdf(*init_pdf, cfg.cdf_grid), n, rng);
  }
  double sigma = cfg.init_sigma;
  if (sigma <= 0.0) sigma = (loss.penalty.upper - loss.penalty.lower) / 4.0;
  return gaussian_init(n, sigma, rng);
}

RunReport run_pipeline(const TargetAutocorr& target, std::size_t n, const RunConfig& cfg,
                       const LossConfig& loss, std::uint64_t swaps_per_step, Rng& rng,
                       const ExactPdf* init_pdf, Signal* initial_out) {
  if (target.lags() > n) {
    throw std::invalid_argument("run: lag window exceeds signal length");
  }

  detail::RunTimer timer;
  Signal x = make_initial_signal(n, cfg, loss, init_pdf, rng);
  if (initial_out) *initial_out = x;

  InterchangeState state(std::move(x), target, loss.metric, cfg.resync_accepted_interval);
  OptimizerState opt(n, cfg.adam);

  const std::uint64_t interval = cfg.trace_interval == 0 ? 1 : cfg.trace_interval;
  const bool budgeted = cfg.budget_seconds > 0.0;

  const auto penalty_now = [&] {
    return range_penalty_value(state.signal().values(), loss.penalty);
  };

  std::vector<TraceEntry> trace;
  trace.push_back({detail::trace_time(timer, cfg.trace_clock), 0, state.current_metric(),
                   state.current_metric() + penalty_now()});

  std::uint64_t step = 0;
  while (true) {
    if (budgeted) {
      if (cfg.steps > 0 && step >= cfg.steps) break;
      if (timer.elapsed() >= cfg.budget_seconds) break;
    } else if (step >= cfg.steps) {
      break;
    }
    ++step;

    // Gradient step on the composite loss, reusing the cached estimate.
    const std::vector<double> grad =
        loss_gradient(state.signal(), state.autocorr(), target, loss);
    adam_step(state.signal_for_update(), grad, opt);
    // The in-place update invalidates the cache; rebuild it in full.
    state.refresh(target, loss.metric);
    if (!std::isfinite(state.current_metric())) {
      throw numeric_error("gradient step diverged to a non-finite loss; reduce the step size");
    }

    for (std::uint64_t s = 0; s < swaps_per_step; ++s) {
      state.propose_and_maybe_swap(target, loss.metric, rng);
    }

    if (step % interval == 0) {
      trace.push_back({detail::trace_time(timer, cfg.trace_clock), step,
                       state.current_metric(), state.current_metric() + penalty_now()});
    }
  }

  // Report exact final numbers, not incrementally maintained ones; the last
  // trace entry reflects the recomputed value too.
  state.refresh(target, loss.metric);

  if (trace.back().step == step) {
    trace.back().metric_d = state.current_metric();
    trace.back().total_loss = state.current_metric() + penalty_now();
  } else {
    trace.push_back({detail::trace_time(timer, cfg.trace_clock), step, state.current_metric(),
                     state.current_metric() + penalty_now()});
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

}  // namespace

RunReport run_combined(const TargetAutocorr& target, std::size_t n, const RunConfig& cfg,
                       const LossConfig& loss, Rng& rng, const ExactPdf* init_pdf,
                       Signal* initial_out) {
  return run_pipeline(target, n, cfg, loss, cfg.swaps_per_gradient_step, rng, init_pdf,
                      initial_out);
}

RunReport run_optimization_only(const TargetAutocorr& target, std::size_t n,
                                const RunConfig& cfg, const LossConfig& loss, Rng& rng,
                                const ExactPdf* init_pdf, Signal* initial_out) {
  return run_pipeline(target, n, cfg, loss, 0, rng, init_pdf, initial_out);
}

}  // namespace ssig
