// Radix-2 complex FFT with unitary scaling (1/sqrt(n) in both directions).
#pragma once

#include <complex>
#include <span>

namespace wlansim {

using Cplx = std::complex<double>;

// In-place transform; length must be a power of two.
void fft_unitary(std::span<Cplx> data, bool inverse);

}  // namespace wlansim
