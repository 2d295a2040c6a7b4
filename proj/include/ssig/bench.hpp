#ifndef SSIG_BENCH_HPP
#define SSIG_BENCH_HPP

#include <cstddef>
#include <vector>

#include "ssig/optim.hpp"
#include "ssig/rng.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Wall-clock cost of the two inner-loop primitives at one problem size:
// a full gradient step (loss gradient + Adam update + autocorrelation
// rebuild) and a single interchange proposal.
struct ScalePoint {
  std::size_t n = 0;
  double gradient_step_seconds = 0.0;
  double swap_proposal_seconds = 0.0;
};

// Times both primitives on a fresh Gaussian-initialized instance of length n
// against `target`. Batch sizes double until a batch takes at least
// min_seconds, so short operations are timed over many repetitions.
ScalePoint measure_scale_point(const TargetAutocorr& target, const LossConfig& loss,
                               std::size_t n, double min_seconds, Rng& rng);

// Least-squares slope of log(y) versus log(x). Requires >= 2 positive points.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ssig

#endif  // SSIG_BENCH_HPP
