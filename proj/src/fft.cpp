#include "ssig/fft.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace ssig {

namespace {

struct Plan {
  std::vector<std::size_t> bitrev;            // index permutation
  std::vector<std::complex<double>> twiddle;  // exp(-2*pi*i*k/n), k < n/2
};

const Plan& plan_for(std::size_t n) {
  thread_local std::map<std::size_t, Plan> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Plan p;
  p.bitrev.resize(n);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
    p.bitrev[i] = r;
  }
  p.twiddle.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    p.twiddle[k] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(n, std::move(p)).first->second;
}

void transform(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft: length must be a nonzero power of two");
  }
  if (n == 1) return;
  const Plan& plan = plan_for(n);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = plan.bitrev[i];
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;  // twiddle stride
    for (std::size_t block = 0; block < n; block += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::complex<double> w = plan.twiddle[k * step];
        if (inverse) w = std::conj(w);
        const std::complex<double> odd = a[block + k + half] * w;
        const std::complex<double> even = a[block + k];
        a[block + k] = even + odd;
        a[block + k + half] = even - odd;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= scale;
  }
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::vector<std::complex<double>>& a) { transform(a, false); }

void ifft(std::vector<std::complex<double>>& a) { transform(a, true); }

}  // namespace ssig
