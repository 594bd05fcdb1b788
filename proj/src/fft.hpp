#pragma once

#include <complex>
#include <vector>

namespace fracterp::detail {

// Unnormalized DFT via FFTW (plan creation serialized internally).
// forward: sum_n v[n] e^{-2 pi i k n / N}; inverse: conjugate kernel.
void fft(std::vector<std::complex<double>>& v, bool inverse);

}  // namespace fracterp::detail
