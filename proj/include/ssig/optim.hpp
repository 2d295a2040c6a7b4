#ifndef SSIG_OPTIM_HPP
#define SSIG_OPTIM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssig/spectral.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Composite loss: weighted autocorrelation mismatch plus a linear penalty
// for samples outside [penalty.lower, penalty.upper].
struct LossConfig {
  MetricConfig metric;
  RangePenalty penalty;
};

struct AdamParams {
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Per-sample Adam moment accumulators. Plain value, one per run.
struct OptimizerState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step_count = 0;
  AdamParams params;

  OptimizerState(std::size_t n, const AdamParams& p)
      : first_moment(n, 0.0), second_moment(n, 0.0), params(p) {}
};

// D(A, A_x) + penalty.weight * sum_t [max(0, lower - x_t) + max(0, x_t - upper)].
double total_loss(const Signal& x, const TargetAutocorr& target, const LossConfig& cfg);

// Penalty term alone (used for trace bookkeeping).
double range_penalty_value(std::span<const double> x, const RangePenalty& p);

// Analytic gradient of total_loss. The metric part
//   g_t = (2/n) * sum_k w_k (A_x(k) - A(k)) (x_{t-k} + x_{t+k})
// (out-of-range neighbors dropped) is evaluated with transform-based
// correlation in O(n log n). The penalty subgradient is -w below the range,
// +w above, and 0 at or inside the bounds.
std::vector<double> loss_gradient(const Signal& x, const TargetAutocorr& target,
                                  const LossConfig& cfg);

// Variant reusing a precomputed estimate (must be the autocorrelation of x
// over the target's lag window); saves one transform pass in the pipeline.
std::vector<double> loss_gradient(const Signal& x, const AutocorrEstimate& ax,
                                  const TargetAutocorr& target, const LossConfig& cfg);

// Standard bias-corrected Adam update, in place; step_count increments by 1.
void adam_step(Signal& x, std::span<const double> grad, OptimizerState& state);

}  // namespace ssig

#endif  // SSIG_OPTIM_HPP
