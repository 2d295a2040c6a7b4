#include "ssig/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssig {

namespace {

// Linear interpolation of a tabulated function at x; xs strictly increasing.
double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace

double TabulatedCdf::value_at(double x) const { return interp(grid, cdf, x); }

double TabulatedCdf::inverse_at(double u) const {
  // First segment whose upper cdf value exceeds u; flat (zero-density)
  // segments are skipped by upper_bound, mapping u at a plateau to the
  // left edge of the region where mass resumes.
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  std::size_t hi = static_cast<std::size_t>(it - cdf.begin());
  if (hi == 0) return grid.front();
  if (hi >= cdf.size()) return grid.back();
  const std::size_t lo = hi - 1;
  const double denom = cdf[hi] - cdf[lo];
  if (denom <= 0.0) return grid[lo];
  const double t = (u - cdf[lo]) / denom;
  return grid[lo] + t * (grid[hi] - grid[lo]);
}

TabulatedCdf integrate_pdf(const ExactPdf& pdf, std::size_t grid_size) {
  if (grid_size < 2) {
    throw std::invalid_argument("integrate_pdf: grid_size must be >= 2");
  }

  const double a = pdf.lower();
  const double b = pdf.upper();
  TabulatedCdf out;
  out.grid.resize(grid_size);
  out.cdf.resize(grid_size);

  const double dx = (b - a) / static_cast<double>(grid_size - 1);
  std::vector<double> dens(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double x = (i + 1 == grid_size) ? b : a + dx * static_cast<double>(i);
    out.grid[i] = x;
    dens[i] = interp(pdf.x, pdf.density, x);
    if (dens[i] < 0.0) {
      throw std::invalid_argument("integrate_pdf: negative density sample");
    }
  }

  out.cdf[0] = 0.0;
  for (std::size_t i = 1; i < grid_size; ++i) {
    out.cdf[i] = out.cdf[i - 1] + 0.5 * (dens[i - 1] + dens[i]) * dx;
  }
  out.mass = out.cdf.back();
  if (!(out.mass > 0.0)) {
    throw std::invalid_argument("integrate_pdf: density has zero total mass");
  }

  const double inv = 1.0 / out.mass;
  for (auto& c : out.cdf) c *= inv;
  out.cdf.back() = 1.0;  // endpoints exact after normalization
  out.cdf.front() = 0.0;
  out.renorm_warning = std::abs(out.mass - 1.0) > 1e-3;
  return out;
}

Signal inverse_transform_sample(const TabulatedCdf& cdf, std::size_t n, Rng& rng) {
  if (cdf.grid.size() < 2 || cdf.grid.size() != cdf.cdf.size()) {
    throw std::invalid_argument("inverse_transform_sample: malformed TabulatedCdf");
  }
  if (n < 2) {
    throw std::invalid_argument("inverse_transform_sample: n must be >= 2");
  }
  std::vector<double> values(n);
  for (auto& v : values) v = cdf.inverse_at(rng.uniform01());
  return Signal(std::move(values));
}

Signal gaussian_init(std::size_t n, double sigma, Rng& rng) {
  if (n < 2) {
    throw std::invalid_argument("gaussian_init: n must be >= 2");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian_init: sigma must be positive");
  }
  std::vector<double> values(n);
  for (auto& v : values) v = sigma * rng.gaussian();
  return Signal(std::move(values));
}

}  // namespace ssig
