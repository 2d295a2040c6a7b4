#include "ssig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ssig/fft.hpp"

namespace ssig {

namespace {

void check_lag_count(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("lag count m must satisfy 1 <= m <= n");
  }
}

}  // namespace

MetricConfig::MetricConfig(std::vector<double> w) : weights(std::move(w)) {
  bool any_positive = false;
  for (double v : weights) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("MetricConfig: weights must be finite and >= 0");
    }
    if (v > 0.0) any_positive = true;
  }
  if (!weights.empty() && !any_positive) {
    throw std::invalid_argument("MetricConfig: at least one weight must be positive");
  }
}

AutocorrEstimate autocorr_fft(const Signal& x, std::size_t m) {
  const std::size_t n = x.size();
  check_lag_count(m, n);

  const std::size_t padded = next_pow2(n + m - 1);
  std::vector<std::complex<double>> buf(padded);
  for (std::size_t t = 0; t < n; ++t) buf[t] = x.values()[t];

  fft(buf);
  for (auto& v : buf) v = std::norm(v);
  ifft(buf);

  AutocorrEstimate est;
  est.values.resize(m);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < m; ++k) est.values[k] = buf[k].real() * inv_n;
  return est;
}

AutocorrEstimate autocorr_direct(const Signal& x, std::size_t m) {
  const std::size_t n = x.size();
  check_lag_count(m, n);

  AutocorrEstimate est;
  est.values.resize(m);
  const auto& v = x.values();
  for (std::size_t k = 0; k < m; ++k) {
    double sum = 0.0;
    for (std::size_t t = 0; t + k < n; ++t) sum += v[t] * v[t + k];
    est.values[k] = sum / static_cast<double>(n);
  }
  return est;
}

// Expand A'(k) - A(k) for x' = x + u*e_i - u*e_j with u = x[j] - x[i]:
// the linear part sums u * (old neighbors of i at +-k) minus the same for j,
// and the quadratic cross part contributes +2u^2 at lag 0 and -u^2 at the
// lag |i-j| where the two edited positions pair with each other. Neighbor
// terms falling outside 0..n-1 drop. Everything uses pre-swap values, which
// makes the update exact for overlapping and adjacent index pairs too.
void swap_delta_into(std::span<const double> x, std::span<const double> a,
                     std::size_t i, std::size_t j, std::span<double> out) {
  const std::size_t n = x.size();
  const std::size_t m = a.size();
  if (i >= n || j >= n || i == j) {
    throw std::invalid_argument("swap_delta: indices must be distinct and in range");
  }
  if (m < 1 || m > n) {
    throw std::invalid_argument("swap_delta: estimate length must be in [1, n]");
  }
  if (out.size() != m) {
    throw std::invalid_argument("swap_delta: output span size mismatch");
  }

  const double u = x[j] - x[i];
  if (u == 0.0) {
    std::copy(a.begin(), a.end(), out.begin());
    return;
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  const std::size_t gap = i > j ? i - j : j - i;
  for (std::size_t k = 0; k < m; ++k) {
    double ni = 0.0;
    if (i >= k) ni += x[i - k];
    if (i + k < n) ni += x[i + k];
    double nj = 0.0;
    if (j >= k) nj += x[j - k];
    if (j + k < n) nj += x[j + k];

    double delta = u * (ni - nj);
    if (k == 0) {
      delta += 2.0 * u * u;
    } else if (k == gap) {
      delta -= u * u;
    }
    out[k] = a[k] + delta * inv_n;
  }
}

AutocorrEstimate swap_delta(const Signal& x, const AutocorrEstimate& a, const SwapProposal& p) {
  AutocorrEstimate out;
  out.values.resize(a.lags());
  swap_delta_into(x.values(), a.values, p.i, p.j, out.values);
  return out;
}

double metric_d(std::span<const double> target, std::span<const double> est,
                std::span<const double> weights) {
  if (target.size() != est.size()) {
    throw std::invalid_argument("metric_d: lag counts differ");
  }
  if (!weights.empty() && weights.size() != target.size()) {
    throw std::invalid_argument("metric_d: weight count differs from lag count");
  }
  double sum = 0.0;
  if (weights.empty()) {
    for (std::size_t k = 0; k < target.size(); ++k) {
      const double d = target[k] - est[k];
      sum += d * d;
    }
  } else {
    for (std::size_t k = 0; k < target.size(); ++k) {
      const double d = target[k] - est[k];
      sum += weights[k] * d * d;
    }
  }
  return sum;
}

double metric_d(const TargetAutocorr& target, const AutocorrEstimate& est,
                const MetricConfig& cfg) {
  return metric_d(target.values(), est.values, cfg.weights);
}

TargetAutocorr psd_to_autocorr(std::span<const double> psd, std::size_t m) {
  const std::size_t bins = psd.size();
  if (m < 1 || bins < m) {
    throw std::invalid_argument("psd_to_autocorr: need 1 <= m <= number of PSD bins");
  }
  for (double s : psd) {
    if (!std::isfinite(s) || s < 0.0) {
      throw std::invalid_argument("psd_to_autocorr: PSD values must be finite and >= 0");
    }
  }

  // Direct inverse DFT of the first m lags, long-double accumulators. The
  // PSD path runs once per target so O(bins*m) is fine and it keeps bin
  // counts free of the power-of-two restriction.
  std::vector<double> real_part(m), imag_part(m);
  const long double two_pi_over_n = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(bins);
  for (std::size_t k = 0; k < m; ++k) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t f = 0; f < bins; ++f) {
      const long double ang = two_pi_over_n * static_cast<long double>(f) * static_cast<long double>(k);
      re += static_cast<long double>(psd[f]) * std::cos(ang);
      im += static_cast<long double>(psd[f]) * std::sin(ang);
    }
    real_part[k] = static_cast<double>(re / static_cast<long double>(bins));
    imag_part[k] = static_cast<double>(im / static_cast<long double>(bins));
  }

  // Lag 0 is the mean power; use it as the scale for the residue check.
  const double scale = real_part[0];
  if (!(scale > 0.0)) {
    throw std::invalid_argument("psd_to_autocorr: spectrum has no power");
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (std::abs(imag_part[k]) > 1e-9 * scale) {
      throw std::runtime_error(
          "psd_to_autocorr: inconsistent spectrum (significant imaginary residue; "
          "PSD of a real signal must satisfy S[f] == S[N-f])");
    }
  }
  return TargetAutocorr(std::move(real_part));
}

double vaf(const TargetAutocorr& target, const AutocorrEstimate& est) {
  const std::size_t m = target.lags();
  if (est.lags() != m) {
    throw std::invalid_argument("vaf: lag counts differ");
  }

  const auto& a = target.values();
  const auto& b = est.values;

  double mean_a = 0.0, mean_r = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    mean_a += a[k];
    mean_r += a[k] - b[k];
  }
  mean_a /= static_cast<double>(m);
  mean_r /= static_cast<double>(m);

  double var_a = 0.0, var_r = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double da = a[k] - mean_a;
    const double dr = (a[k] - b[k]) - mean_r;
    var_a += da * da;
    var_r += dr * dr;
  }
  if (!(var_a > 0.0)) {
    throw std::invalid_argument("vaf: target has zero variance over the lag window");
  }
  return 100.0 * (1.0 - var_r / var_a);
}

}  // namespace ssig
