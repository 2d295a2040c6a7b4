#ifndef SSIG_TYPES_HPP
#define SSIG_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ssig {

// Thrown when a run goes numerically bad (NaN/inf produced mid-optimization).
// Distinct from std::invalid_argument so the CLI can map it to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
  }
}

}  // namespace detail

// Fixed-length sequence of real sample values. Length and finiteness are
// checked at construction; mutating access is provided for the optimizers,
// which re-validate after each step.
class Signal {
 public:
  explicit Signal(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
      throw std::invalid_argument("Signal: length must be at least 2");
    }
    detail::require_finite(values_, "Signal");
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  std::vector<double> values_;
};

// Target correlation values over a lag window, indexed by lag k = 0..m-1.
// Lag zero is the mean signal power and must be positive.
class TargetAutocorr {
 public:
  explicit TargetAutocorr(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
      throw std::invalid_argument("TargetAutocorr: needs at least one lag");
    }
    detail::require_finite(values_, "TargetAutocorr");
    if (!(values_[0] > 0.0)) {
      throw std::invalid_argument("TargetAutocorr: lag-0 value must be positive");
    }
  }

  std::size_t lags() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Sample autocorrelation over the same lag window and normalization as the
// target: A(k) = (1/n) * sum_t x_t * x_{t+k}, biased, non-mean-subtracted.
struct AutocorrEstimate {
  std::vector<double> values;

  std::size_t lags() const { return values.size(); }
};

// Tabulated density on [x.front(), x.back()], used for inverse transform
// sampling. Normalization happens in integrate_pdf, not here.
struct ExactPdf {
  std::vector<double> x;
  std::vector<double> density;

  ExactPdf(std::vector<double> support, std::vector<double> dens)
      : x(std::move(support)), density(std::move(dens)) {
    if (x.size() < 2 || x.size() != density.size()) {
      throw std::invalid_argument("ExactPdf: need >= 2 matching (x, density) points");
    }
    detail::require_finite(x, "ExactPdf support");
    detail::require_finite(density, "ExactPdf density");
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (!(x[i] > x[i - 1])) {
        throw std::invalid_argument("ExactPdf: support points must be strictly increasing");
      }
    }
    for (double d : density) {
      if (d < 0.0) throw std::invalid_argument("ExactPdf: density must be nonnegative");
    }
  }

  double lower() const { return x.front(); }
  double upper() const { return x.back(); }
};

// Linear out-of-range penalty with weight lambda. weight == 0 disables the
// penalty (the CLI layer additionally enforces weight > 0 on user configs).
struct RangePenalty {
  double lower;
  double upper;
  double weight;

  RangePenalty(double lo, double hi, double w = 1.0) : lower(lo), upper(hi), weight(w) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(w)) {
      throw std::invalid_argument("RangePenalty: parameters must be finite");
    }
    if (!(lo < hi)) {
      throw std::invalid_argument("RangePenalty: lower must be < upper");
    }
    if (w < 0.0) {
      throw std::invalid_argument("RangePenalty: weight must be >= 0");
    }
  }
};

// Either an exact PDF to match (interchange engine) or a range constraint
// enforced through the loss (gradient engines).
using PdfSpec = std::variant<ExactPdf, RangePenalty>;

// Windowed mean / power drift summary of a single realization. Reported,
// never asserted pass/fail inside the library.
struct StationarityScore {
  std::size_t window_count = 0;
  std::vector<double> window_means;
  std::vector<double> window_powers;    // per-window mean square
  double mean_deviation = 0.0;          // max_b |mean_b - mean| / global std
  double power_ratio_deviation = 0.0;   // max_b |power_b / power - 1|
};

}  // namespace ssig

#endif  // SSIG_TYPES_HPP
