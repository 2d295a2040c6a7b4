#include "ssig/optim.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ssig/fft.hpp"

namespace ssig {

double range_penalty_value(std::span<const double> x, const RangePenalty& p) {
  double sum = 0.0;
  for (double v : x) {
    if (v < p.lower) {
      sum += p.lower - v;
    } else if (v > p.upper) {
      sum += v - p.upper;
    }
  }
  return p.weight * sum;
}

double total_loss(const Signal& x, const TargetAutocorr& target, const LossConfig& cfg) {
  const AutocorrEstimate ax = autocorr_fft(x, target.lags());
  return metric_d(target, ax, cfg.metric) + range_penalty_value(x.values(), cfg.penalty);
}

std::vector<double> loss_gradient(const Signal& x, const AutocorrEstimate& ax,
                                  const TargetAutocorr& target, const LossConfig& cfg) {
  const std::size_t n = x.size();
  const std::size_t m = target.lags();
  if (ax.lags() != m) {
    throw std::invalid_argument("loss_gradient: estimate lag count differs from target");
  }
  if (!cfg.metric.weights.empty() && cfg.metric.weights.size() != m) {
    throw std::invalid_argument("loss_gradient: weight count differs from lag count");
  }
  if (m > n) {
    throw std::invalid_argument("loss_gradient: lag window exceeds signal length");
  }

  // Weighted residual r_k = w_k (A_x(k) - A(k)). The metric gradient is
  //   (2/n) * [ (r conv x)_t + (r corr x)_t ]
  // and both terms share one spectrum: conv has spectrum R*X, corr has
  // conj(R)*X, so their sum is 2*Re(R)*X. Zero padding past n+m-1 keeps the
  // circular products equal to the linear ones on t = 0..n-1.
  std::vector<double> residual(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double w = cfg.metric.weights.empty() ? 1.0 : cfg.metric.weights[k];
    residual[k] = w * (ax.values[k] - target.values()[k]);
  }

  const std::size_t padded = next_pow2(n + m - 1);
  std::vector<std::complex<double>> xs(padded), rs(padded);
  for (std::size_t t = 0; t < n; ++t) xs[t] = x.values()[t];
  for (std::size_t k = 0; k < m; ++k) rs[k] = residual[k];
  fft(xs);
  fft(rs);
  for (std::size_t f = 0; f < padded; ++f) xs[f] *= 2.0 * rs[f].real();
  ifft(xs);

  std::vector<double> grad(n);
  const double scale = 2.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) grad[t] = scale * xs[t].real();

  const RangePenalty& p = cfg.penalty;
  if (p.weight != 0.0) {
    const auto& v = x.values();
    for (std::size_t t = 0; t < n; ++t) {
      if (v[t] < p.lower) {
        grad[t] -= p.weight;
      } else if (v[t] > p.upper) {
        grad[t] += p.weight;
      }
    }
  }
  return grad;
}

std::vector<double> loss_gradient(const Signal& x, const TargetAutocorr& target,
                                  const LossConfig& cfg) {
  const AutocorrEstimate ax = autocorr_fft(x, target.lags());
  return loss_gradient(x, ax, target, cfg);
}

void adam_step(Signal& x, std::span<const double> grad, OptimizerState& state) {
  const std::size_t n = x.size();
  if (grad.size() != n || state.first_moment.size() != n || state.second_moment.size() != n) {
    throw std::invalid_argument("adam_step: size mismatch");
  }

  const AdamParams& p = state.params;
  state.step_count += 1;
  const double t = static_cast<double>(state.step_count);
  const double corr1 = 1.0 - std::pow(p.beta1, t);
  const double corr2 = 1.0 - std::pow(p.beta2, t);

  auto& v = x.values();
  for (std::size_t i = 0; i < n; ++i) {
    const double g = grad[i];
    state.first_moment[i] = p.beta1 * state.first_moment[i] + (1.0 - p.beta1) * g;
    state.second_moment[i] = p.beta2 * state.second_moment[i] + (1.0 - p.beta2) * g * g;
    const double m_hat = state.first_moment[i] / corr1;
    const double v_hat = state.second_moment[i] / corr2;
    v[i] -= p.alpha * m_hat / (std::sqrt(v_hat) + p.epsilon);
  }
}

}  // namespace ssig
