#ifndef SSIG_FFT_HPP
#define SSIG_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace ssig {

// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transforms on power-of-two lengths. Twiddle
// tables and bit-reversal maps are cached per length in thread-local storage;
// results are deterministic for identical inputs.
void fft(std::vector<std::complex<double>>& a);

// Inverse transform including the 1/N scaling.
void ifft(std::vector<std::complex<double>>& a);

}  // namespace ssig

#endif  // SSIG_FFT_HPP
