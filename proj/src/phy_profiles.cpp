#include "phy_profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace wlansim {

namespace {

std::vector<int> contiguous_indices(int max_abs) {
  std::vector<int> idx;
  idx.reserve(2 * static_cast<std::size_t>(max_abs));
  for (int k = -max_abs; k <= max_abs; ++k) {
    if (k != 0) idx.push_back(k);
  }
  return idx;
}

OfdmProfile make_profile(Standard s) {
  OfdmProfile p;
  p.standard = s;
  if (s == Standard::G) {
    p.n_fft = 64;
    p.data_subcarrier_indices = contiguous_indices(26);
    p.sample_rate_hz = 20e6;
    p.n_spatial_streams = 1;
    p.phy_bit_rate_bps = 6e6;
  } else {
    p.n_fft = 128;
    p.data_subcarrier_indices = contiguous_indices(57);
    p.sample_rate_hz = 40e6;
    p.n_spatial_streams = 2;
    p.phy_bit_rate_bps = 30e6;
  }
  p.cp_duration_s = 0.8e-6;
  return p;
}

}  // namespace

const char* standard_name(Standard s) { return s == Standard::G ? "g" : "n"; }

int OfdmProfile::n_cp_samples() const {
  return static_cast<int>(std::lround(cp_duration_s * sample_rate_hz));
}

double OfdmProfile::data_symbol_duration_s() const {
  return static_cast<double>(n_fft) / sample_rate_hz;
}

const OfdmProfile& profile_for(Standard s) {
  static const OfdmProfile g = make_profile(Standard::G);
  static const OfdmProfile n = make_profile(Standard::N);
  return s == Standard::G ? g : n;
}

double es_eb_offset_db(const OfdmProfile& profile) {
  if (profile.n_fft <= 0) throw std::invalid_argument("profile n_fft must be positive");
  const double carrier_ratio =
      static_cast<double>(profile.n_data_subcarriers()) / static_cast<double>(profile.n_fft);
  const double t_d = profile.data_symbol_duration_s();
  const double time_ratio = t_d / (t_d + profile.cp_duration_s);
  return 10.0 * std::log10(carrier_ratio) + 10.0 * std::log10(time_ratio);
}

int bits_per_ofdm_symbol(const OfdmProfile& profile) {
  return profile.n_data_subcarriers() * profile.n_spatial_streams;
}

EnergyBudget energy_budget_for(const OfdmProfile& profile, double eb_n0_db) {
  EnergyBudget b;
  b.eb_n0_db = eb_n0_db;
  b.es_n0_db = eb_n0_db + es_eb_offset_db(profile);
  b.data_symbol_duration_s = profile.data_symbol_duration_s();
  return b;
}

}  // namespace wlansim
