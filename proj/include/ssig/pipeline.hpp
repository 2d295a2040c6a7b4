#ifndef SSIG_PIPELINE_HPP
#define SSIG_PIPELINE_HPP

#include <cstddef>

#include "ssig/optim.hpp"
#include "ssig/report.hpp"
#include "ssig/rng.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Interleaved run: per outer step, one Adam update on the full loss, a full
// autocorrelation rebuild, then cfg.swaps_per_gradient_step greedy sample
// interchanges on the updated signal. Initialization is Gaussian
// (sigma = cfg.init_sigma, or a quarter of the penalty range when 0) unless
// cfg.init_from_pdf is set, in which case init_pdf must be provided and the
// start signal is drawn from it by inverse transform sampling.
// If initial_out is non-null it receives a copy of the initial signal.
RunReport run_combined(const TargetAutocorr& target, std::size_t n, const RunConfig& cfg,
                       const LossConfig& loss, Rng& rng, const ExactPdf* init_pdf = nullptr,
                       Signal* initial_out = nullptr);

// Same loop with zero interchange proposals per step: pure gradient descent
// on the composite loss. Baseline for stationarity comparisons.
RunReport run_optimization_only(const TargetAutocorr& target, std::size_t n,
                                const RunConfig& cfg, const LossConfig& loss, Rng& rng,
                                const ExactPdf* init_pdf = nullptr,
                                Signal* initial_out = nullptr);

}  // namespace ssig

#endif  // SSIG_PIPELINE_HPP
