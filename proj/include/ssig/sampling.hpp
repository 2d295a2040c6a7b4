#ifndef SSIG_SAMPLING_HPP
#define SSIG_SAMPLING_HPP

#include <cstddef>
#include <vector>

#include "ssig/rng.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Cumulative distribution tabulated on a uniform grid over [a, b].
// cdf.front() == 0 and cdf.back() == 1 exactly after normalization.
struct TabulatedCdf {
  std::vector<double> grid;
  std::vector<double> cdf;
  double mass = 0.0;            // integral of the raw density before renormalization
  bool renorm_warning = false;  // |mass - 1| > 1e-3

  // CDF value at x, linear interpolation; clamps outside [a, b].
  double value_at(double x) const;

  // Piecewise-linear inverse: smallest x with CDF(x) >= u, for u in [0, 1).
  double inverse_at(double u) const;
};

// Trapezoidal cumulative integral of the tabulated density on a uniform grid
// of grid_size points, renormalized so the final value is exactly 1. The raw
// mass is kept so callers can surface a warning when it is off by > 1e-3.
TabulatedCdf integrate_pdf(const ExactPdf& pdf, std::size_t grid_size);

// n samples through the piecewise-linear inverse CDF (binary search per draw).
Signal inverse_transform_sample(const TabulatedCdf& cdf, std::size_t n, Rng& rng);

// n independent N(0, sigma^2) samples.
Signal gaussian_init(std::size_t n, double sigma, Rng& rng);

}  // namespace ssig

#endif  // SSIG_SAMPLING_HPP
