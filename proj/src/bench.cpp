#include "ssig/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ssig/interchange.hpp"
#include "ssig/sampling.hpp"

namespace ssig {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Runs op(batch) with doubling batch sizes until one batch takes at least
// min_seconds, then reports seconds per repetition of that batch.
template <typename Op>
double time_per_rep(Op&& op, std::uint64_t initial_batch, double min_seconds) {
  std::uint64_t batch = initial_batch == 0 ? 1 : initial_batch;
  for (;;) {
    const double t0 = now_seconds();
    op(batch);
    const double dt = now_seconds() - t0;
    if (dt >= min_seconds) return dt / static_cast<double>(batch);
    batch *= 2;
  }
}

}  // namespace

ScalePoint measure_scale_point(const TargetAutocorr& target, const LossConfig& loss,
                               std::size_t n, double min_seconds, Rng& rng) {
  if (target.lags() > n) {
    throw std::invalid_argument("measure_scale_point: lag window exceeds signal length");
  }
  const double sigma = (loss.penalty.upper - loss.penalty.lower) / 4.0;
  Signal x = gaussian_init(n, sigma, rng);
  InterchangeState state(std::move(x), target, loss.metric);
  OptimizerState opt(n, AdamParams{});

  ScalePoint point;
  point.n = n;

  // Warm-up pass so one-time costs (transform plan build, page faults) do
  // not land inside the timed region.
  {
    const std::vector<double> grad =
        loss_gradient(state.signal(), state.autocorr(), target, loss);
    adam_step(state.signal_for_update(), grad, opt);
    state.refresh(target, loss.metric);
  }

  point.gradient_step_seconds = time_per_rep(
      [&](std::uint64_t batch) {
        for (std::uint64_t k = 0; k < batch; ++k) {
          const std::vector<double> grad =
              loss_gradient(state.signal(), state.autocorr(), target, loss);
          adam_step(state.signal_for_update(), grad, opt);
          state.refresh(target, loss.metric);
        }
      },
      1, min_seconds);

  point.swap_proposal_seconds = time_per_rep(
      [&](std::uint64_t batch) {
        for (std::uint64_t k = 0; k < batch; ++k) {
          state.propose_and_maybe_swap(target, loss.metric, rng);
        }
      },
      1024, min_seconds);

  return point;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_loglog_slope: need >= 2 matching points");
  }
  const std::size_t n = x.size();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw std::invalid_argument("fit_loglog_slope: points must be positive");
    }
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_loglog_slope: x values are all equal");
  }
  return sxy / sxx;
}

}  // namespace ssig
