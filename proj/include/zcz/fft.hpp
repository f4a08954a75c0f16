#pragma once

#include <complex>
#include <vector>

namespace zcz::fft {

// In-place DFT (inverse includes the 1/N factor). Any length >= 1;
// non-power-of-two lengths go through the Bluestein chirp transform.
void transform(std::vector<std::complex<double>>& data, bool inverse);

// R(tau) = sum_i a[i] * conj(b[(i + tau) mod N]) for tau in [0, N), via transforms.
std::vector<std::complex<double>> periodic_cross_correlation(const std::vector<std::complex<double>>& a,
                                                             const std::vector<std::complex<double>>& b);

}  // namespace zcz::fft
