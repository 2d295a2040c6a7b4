#ifndef SSIG_SPECTRAL_HPP
#define SSIG_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ssig/types.hpp"

namespace ssig {

// Lag-window comparison configuration. Empty weights mean all ones; when
// given, weights must be nonnegative with at least one strictly positive.
struct MetricConfig {
  std::vector<double> weights;

  MetricConfig() = default;
  explicit MetricConfig(std::vector<double> w);
};

// Candidate exchange of two distinct sample positions (0-based).
struct SwapProposal {
  std::size_t i;
  std::size_t j;
};

// Biased, non-mean-subtracted, linear sample autocorrelation over m lags:
//   A(k) = (1/n) * sum_{t=0}^{n-1-k} x[t] * x[t+k],  k = 0..m-1.
// Computed via a zero-padded power-of-two transform in O(n log n).
AutocorrEstimate autocorr_fft(const Signal& x, std::size_t m);

// Same quantity by direct O(n*m) summation; the oracle for autocorr_fft.
AutocorrEstimate autocorr_direct(const Signal& x, std::size_t m);

// Autocorrelation of x with entries p.i and p.j exchanged, derived from the
// current estimate in O(m) without recomputation. Exact for every overlap
// case (adjacent indices, |i-j| within the lag window, shared neighbors).
AutocorrEstimate swap_delta(const Signal& x, const AutocorrEstimate& a, const SwapProposal& p);

// Allocation-free core of swap_delta for hot loops; `out` has a.lags() slots.
void swap_delta_into(std::span<const double> x, std::span<const double> a,
                     std::size_t i, std::size_t j, std::span<double> out);

// Weighted squared mismatch: D = sum_k w_k * (A(k) - A_x(k))^2.
double metric_d(const TargetAutocorr& target, const AutocorrEstimate& est,
                const MetricConfig& cfg);
double metric_d(std::span<const double> target, std::span<const double> est,
                std::span<const double> weights /* empty = unit */);

// First m lags of the inverse DFT of a one-period PSD (Wiener-Khinchin).
// The PSD covers bins f = 0..N-1 of a length-N DFT; a physical (symmetric)
// spectrum yields a real result, and an imaginary residue above 1e-9 of the
// lag-0 power is rejected as an inconsistent spectrum.
TargetAutocorr psd_to_autocorr(std::span<const double> psd, std::size_t m);

// Variance accounted for, in percent, over the lag window:
//   100 * (1 - var(A - A_x) / var(A)),  var = mean-removed second moment.
double vaf(const TargetAutocorr& target, const AutocorrEstimate& est);

}  // namespace ssig

#endif  // SSIG_SPECTRAL_HPP
