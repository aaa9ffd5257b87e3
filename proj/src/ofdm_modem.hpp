// BPSK bit mapping and the OFDM modulate/demodulate chain:
// subcarrier mapping, unitary IDFT/DFT and cyclic prefix handling.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fft.hpp"
#include "phy_profiles.hpp"

namespace wlansim {

// Frequency-domain frame, one slot per DFT bin (length n_fft).
// Bins outside the data subcarriers stay exactly zero at the transmitter.
struct SpectrumFrame {
  std::vector<Cplx> bins;
};

// Time-domain frame of n_fft + n_cp samples; the first n_cp samples
// replicate the tail of the body (cyclic prefix).
struct TimeFrame {
  std::vector<Cplx> samples;
};

// bit 0 -> +1, bit 1 -> -1 (unit symbol energy).
std::vector<Cplx> bpsk_map(std::span<const uint8_t> bits);

// Hard decision: bit = 1 iff re < 0; a tie (re == 0, including NaN) gives 0.
std::vector<uint8_t> bpsk_demap(std::span<const Cplx> symbols);

// Places |symbols| == n_data_subcarriers symbols on the data bins in
// ascending signed-index order; throws std::invalid_argument on mismatch.
SpectrumFrame subcarrier_map(std::span<const Cplx> symbols, const OfdmProfile& profile);

// Inverse of subcarrier_map: pulls the data bins back out in the same order.
std::vector<Cplx> subcarrier_extract(const SpectrumFrame& frame, const OfdmProfile& profile);

// Unitary IDFT of the bins, then cyclic prefix prepended.
TimeFrame ofdm_modulate(const SpectrumFrame& frame, const OfdmProfile& profile);

// Drops the cyclic prefix and applies the unitary DFT; throws
// std::invalid_argument if the frame length is not n_fft + n_cp.
SpectrumFrame ofdm_demodulate(const TimeFrame& tf, const OfdmProfile& profile);

}  // namespace wlansim
