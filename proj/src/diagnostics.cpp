#include "ssig/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ssig {

StationarityScore stationarity(const Signal& x, std::size_t window_count) {
  const std::vector<double>& v = x.values();
  if (window_count < 2) {
    throw std::invalid_argument("stationarity: window_count must be at least 2");
  }
  const std::size_t w = v.size() / window_count;
  if (w == 0) {
    throw std::invalid_argument("stationarity: signal shorter than window_count");
  }
  const std::size_t kept = w * window_count;

  // Global moments over the kept prefix, so windows and globals cover the
  // same samples and the deviations are exactly zero for a periodic tiling.
  double mean = 0.0;
  double power = 0.0;
  for (std::size_t t = 0; t < kept; ++t) {
    mean += v[t];
    power += v[t] * v[t];
  }
  mean /= static_cast<double>(kept);
  power /= static_cast<double>(kept);

  const double variance = power - mean * mean;
  if (!(variance > 0.0) || power <= 0.0) {
    throw std::invalid_argument("stationarity: signal is constant");
  }
  const double sigma = std::sqrt(variance);

  StationarityScore score;
  score.window_count = window_count;
  score.window_means.resize(window_count);
  score.window_powers.resize(window_count);
  score.mean_deviation = 0.0;
  score.power_ratio_deviation = 0.0;
  for (std::size_t b = 0; b < window_count; ++b) {
    double wm = 0.0;
    double wp = 0.0;
    for (std::size_t t = b * w; t < (b + 1) * w; ++t) {
      wm += v[t];
      wp += v[t] * v[t];
    }
    wm /= static_cast<double>(w);
    wp /= static_cast<double>(w);
    score.window_means[b] = wm;
    score.window_powers[b] = wp;
    score.mean_deviation = std::max(score.mean_deviation, std::abs(wm - mean) / sigma);
    score.power_ratio_deviation =
        std::max(score.power_ratio_deviation, std::abs(wp / power - 1.0));
  }
  return score;
}

std::vector<double> empirical_quantiles(const Signal& x) {
  std::vector<double> sorted = x.values();
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

void export_trace(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("export_trace: cannot open '" + path + "' for writing");
  }
  out << "elapsed_seconds,step,metric_d,total_loss\n";
  char buf[128];
  for (const TraceEntry& e : report.trace) {
    std::snprintf(buf, sizeof(buf), "%.17g,%llu,%.17g,%.17g\n", e.elapsed_seconds,
                  static_cast<unsigned long long>(e.step), e.metric_d, e.total_loss);
    out << buf;
  }
  if (!out) {
    throw std::runtime_error("export_trace: write to '" + path + "' failed");
  }
}

}  // namespace ssig
