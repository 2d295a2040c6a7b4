#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "ssig/rng.hpp"
#include "ssig/sampling.hpp"

using ssig::ExactPdf;
using ssig::Signal;
using ssig::TabulatedCdf;

namespace {

double normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); }

// Kolmogorov-Smirnov statistic of samples against an analytic CDF.
double ks_statistic(std::vector<double> samples, double (*cdf)(double)) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max(worst, std::abs((static_cast<double>(i) + 1.0) / n - f));
    worst = std::max(worst, std::abs(static_cast<double>(i) / n - f));
  }
  return worst;
}

}  // namespace

TEST_CASE("uniform density integrates to a linear CDF") {
  const ExactPdf pdf({-0.5, 0.5}, {1.0, 1.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 1001);
  CHECK(cdf.cdf.front() == 0.0);
  CHECK(cdf.cdf.back() == 1.0);
  CHECK_FALSE(cdf.renorm_warning);
  CHECK(cdf.value_at(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cdf.value_at(-0.25) == doctest::Approx(0.25).epsilon(1e-12));
  for (std::size_t i = 1; i < cdf.cdf.size(); ++i) {
    CHECK(cdf.cdf[i] >= cdf.cdf[i - 1]);
  }
}

TEST_CASE("triangular density integrates to the squared CDF") {
  // density 2x on [0, 1] has CDF x^2.
  const ExactPdf pdf({0.0, 1.0}, {0.0, 2.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 2001);
  for (std::size_t i = 0; i < cdf.grid.size(); ++i) {
    const double x = cdf.grid[i];
    CHECK(std::abs(cdf.cdf[i] - x * x) <= 1e-6);
  }
}

TEST_CASE("truncated Gaussian density is symmetric about zero") {
  std::vector<double> xs;
  std::vector<double> ds;
  for (int i = 0; i <= 600; ++i) {
    const double x = -3.0 + 6.0 * static_cast<double>(i) / 600.0;
    xs.push_back(x);
    ds.push_back(std::exp(-0.5 * x * x));
  }
  const TabulatedCdf cdf = ssig::integrate_pdf(ExactPdf(xs, ds), 4096);
  CHECK(cdf.value_at(0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("integrate_pdf flags densities whose raw mass is off") {
  // Density 2 on a unit-length interval integrates to 2.
  const ExactPdf pdf({-0.5, 0.5}, {2.0, 2.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 101);
  CHECK(cdf.mass == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cdf.renorm_warning);
  CHECK(cdf.cdf.back() == 1.0);  // renormalized regardless
}

TEST_CASE("degenerate densities are rejected") {
  CHECK_THROWS_AS(ExactPdf({0.0, 1.0}, {1.0, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ExactPdf({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)ssig::integrate_pdf(ExactPdf({0.0, 1.0}, {0.0, 0.0}), 64),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ssig::integrate_pdf(ExactPdf({0.0, 1.0}, {1.0, 1.0}), 1),
                  std::invalid_argument);
}

TEST_CASE("flat CDF segments invert onto the plateau") {
  const ExactPdf pdf({0.0, 1.0, 2.0, 3.0}, {1.0, 0.0, 0.0, 1.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 4);
  const double v = cdf.inverse_at(0.5);
  CHECK(v >= 1.0);
  CHECK(v <= 2.0);
  CHECK(cdf.inverse_at(0.0) == 0.0);
  CHECK(cdf.inverse_at(1.0) == 3.0);
}

TEST_CASE("uniform sampling passes a KS test and stays in range") {
  ssig::Rng rng(101);
  const ExactPdf pdf({-0.5, 0.5}, {1.0, 1.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 4096);
  const Signal x = ssig::inverse_transform_sample(cdf, 100000, rng);
  for (double v : x.values()) {
    CHECK(v >= -0.5);
    CHECK(v <= 0.5);
  }
  const double ks = ks_statistic(x.values(), [](double v) { return v + 0.5; });
  CHECK(ks <= 1.63 / std::sqrt(100000.0));
}

TEST_CASE("two-spike density concentrates samples at the spikes") {
  // Narrow triangles at -1 and +2 with equal mass; theoretical mean 0.5.
  const double w = 0.01;
  const ExactPdf pdf({-1.0 - w, -1.0, -1.0 + w, 2.0 - w, 2.0, 2.0 + w},
                     {0.0, 1.0, 0.0, 0.0, 1.0, 0.0});
  const TabulatedCdf cdf = ssig::integrate_pdf(pdf, 65536);
  ssig::Rng rng(103);
  const std::size_t n = 20000;
  const Signal x = ssig::inverse_transform_sample(cdf, n, rng);

  std::size_t near_spike = 0;
  double sum = 0.0;
  for (double v : x.values()) {
    sum += v;
    if (std::abs(v + 1.0) <= w || std::abs(v - 2.0) <= w) ++near_spike;
  }
  CHECK(near_spike == n);

  // Mean of the mixture is 0.5 with per-sample standard deviation 1.5.
  const double se = 1.5 / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(sum / static_cast<double>(n) - 0.5) < 3.0 * se);
}

TEST_CASE("sample lengths below 2 are rejected") {
  const TabulatedCdf cdf = ssig::integrate_pdf(ExactPdf({0.0, 1.0}, {1.0, 1.0}), 64);
  ssig::Rng rng(1);
  CHECK_THROWS_AS((void)ssig::inverse_transform_sample(cdf, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)ssig::inverse_transform_sample(cdf, 1, rng), std::invalid_argument);
}

TEST_CASE("gaussian_init moments and tails") {
  ssig::Rng rng(7);
  const Signal x = ssig::gaussian_init(1000000, 1.0, rng);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : x.values()) {
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(x.size());
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(sum_sq / n - mean * mean - 1.0) < 0.02);

  // sigma = 0.1: |x| > 0.5 is a 5-sigma event, about 5.7e-7 per sample.
  ssig::Rng rng2(8);
  const Signal y = ssig::gaussian_init(1000000, 0.1, rng2);
  std::size_t tail = 0;
  for (double v : y.values()) {
    if (std::abs(v) > 0.5) ++tail;
  }
  CHECK(tail <= 3);
}

TEST_CASE("gaussian_init is deterministic and validates sigma") {
  ssig::Rng a(55);
  ssig::Rng b(55);
  const Signal xa = ssig::gaussian_init(1000, 0.25, a);
  const Signal xb = ssig::gaussian_init(1000, 0.25, b);
  CHECK(xa.values() == xb.values());

  ssig::Rng c(1);
  CHECK_THROWS_AS((void)ssig::gaussian_init(10, 0.0, c), std::invalid_argument);
  CHECK_THROWS_AS((void)ssig::gaussian_init(10, -1.0, c), std::invalid_argument);
}

TEST_CASE("truncated Gaussian sampling passes a KS test") {
  std::vector<double> xs;
  std::vector<double> ds;
  for (int i = 0; i <= 4000; ++i) {
    const double x = -3.0 + 6.0 * static_cast<double>(i) / 4000.0;
    xs.push_back(x);
    ds.push_back(std::exp(-0.5 * x * x));
  }
  const TabulatedCdf cdf = ssig::integrate_pdf(ExactPdf(xs, ds), 8192);
  ssig::Rng rng(107);
  const Signal x = ssig::inverse_transform_sample(cdf, 100000, rng);
  const double ks = ks_statistic(x.values(), [](double v) {
    const double lo = normal_cdf(-3.0);
    const double hi = normal_cdf(3.0);
    return (normal_cdf(v) - lo) / (hi - lo);
  });
  CHECK(ks <= 1.63 / std::sqrt(100000.0));
}
