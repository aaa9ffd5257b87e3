// 802.11g / 802.11n BPSK-OFDM modulation parameter sets and the
// bit-energy / symbol-energy budget arithmetic.
#pragma once

#include <vector>

namespace wlansim {

enum class Standard { G, N };

const char* standard_name(Standard s);  // "g" or "n"

struct OfdmProfile {
  Standard standard = Standard::G;
  int n_fft = 0;
  // Signed DFT bin indices carrying data, ascending; never contains 0.
  std::vector<int> data_subcarrier_indices;
  double sample_rate_hz = 0.0;
  double cp_duration_s = 0.0;
  int n_spatial_streams = 1;
  double phy_bit_rate_bps = 0.0;

  int n_data_subcarriers() const { return static_cast<int>(data_subcarrier_indices.size()); }
  int n_cp_samples() const;
  // T_d, derived from n_fft / sample_rate so the profiles cannot drift.
  double data_symbol_duration_s() const;
};

// Frozen parameter sets:
//   g: 64-FFT, 52 carriers {-26..-1, +1..+26}, 20 MHz, CP 0.8 us, 1 stream, 6 Mbps
//   n: 128-FFT, 114 carriers {-57..-1, +1..+57}, 40 MHz, CP 0.8 us, 2 streams, 30 Mbps
const OfdmProfile& profile_for(Standard s);

// 10*log10(nDSC/nFFT) + 10*log10(T_d/(T_d+T_cp)); always <= 0.
// This is the dB offset such that Es/N0 = Eb/N0 + offset.
double es_eb_offset_db(const OfdmProfile& profile);

// Payload bits consumed per modulation block: one BPSK bit per data
// subcarrier per spatial stream (for the 2-stream profile the block spans
// the two symbol periods of one space-time codeword).
int bits_per_ofdm_symbol(const OfdmProfile& profile);

struct EnergyBudget {
  double eb_n0_db = 0.0;
  double es_n0_db = 0.0;
  double data_symbol_duration_s = 0.0;
};

EnergyBudget energy_budget_for(const OfdmProfile& profile, double eb_n0_db);

}  // namespace wlansim
