#include "ofdm_modem.hpp"

#include <stdexcept>
#include <string>

namespace wlansim {

namespace {

// Signed subcarrier index k -> DFT bin k mod n_fft.
inline std::size_t bin_of(int index, int n_fft) {
  return static_cast<std::size_t>(index >= 0 ? index : index + n_fft);
}

}  // namespace

std::vector<Cplx> bpsk_map(std::span<const uint8_t> bits) {
  std::vector<Cplx> symbols(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    symbols[i] = bits[i] ? Cplx{-1.0, 0.0} : Cplx{1.0, 0.0};
  }
  return symbols;
}

std::vector<uint8_t> bpsk_demap(std::span<const Cplx> symbols) {
  std::vector<uint8_t> bits(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    bits[i] = symbols[i].real() < 0.0 ? 1 : 0;
  }
  return bits;
}

SpectrumFrame subcarrier_map(std::span<const Cplx> symbols, const OfdmProfile& profile) {
  const auto& indices = profile.data_subcarrier_indices;
  if (symbols.size() != indices.size()) {
    throw std::invalid_argument("subcarrier_map: expected " + std::to_string(indices.size()) +
                                " symbols, got " + std::to_string(symbols.size()));
  }
  SpectrumFrame frame;
  frame.bins.assign(static_cast<std::size_t>(profile.n_fft), Cplx{0.0, 0.0});
  for (std::size_t i = 0; i < indices.size(); ++i) {
    frame.bins[bin_of(indices[i], profile.n_fft)] = symbols[i];
  }
  return frame;
}

std::vector<Cplx> subcarrier_extract(const SpectrumFrame& frame, const OfdmProfile& profile) {
  if (frame.bins.size() != static_cast<std::size_t>(profile.n_fft)) {
    throw std::invalid_argument("subcarrier_extract: frame length does not match n_fft");
  }
  const auto& indices = profile.data_subcarrier_indices;
  std::vector<Cplx> symbols(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    symbols[i] = frame.bins[bin_of(indices[i], profile.n_fft)];
  }
  return symbols;
}

TimeFrame ofdm_modulate(const SpectrumFrame& frame, const OfdmProfile& profile) {
  if (frame.bins.size() != static_cast<std::size_t>(profile.n_fft)) {
    throw std::invalid_argument("ofdm_modulate: frame length does not match n_fft");
  }
  const std::size_t n_cp = static_cast<std::size_t>(profile.n_cp_samples());
  const std::size_t n = static_cast<std::size_t>(profile.n_fft);

  std::vector<Cplx> body(frame.bins);
  fft_unitary(body, /*inverse=*/true);

  TimeFrame tf;
  tf.samples.resize(n_cp + n);
  for (std::size_t i = 0; i < n_cp; ++i) tf.samples[i] = body[n - n_cp + i];
  for (std::size_t i = 0; i < n; ++i) tf.samples[n_cp + i] = body[i];
  return tf;
}

SpectrumFrame ofdm_demodulate(const TimeFrame& tf, const OfdmProfile& profile) {
  const std::size_t n_cp = static_cast<std::size_t>(profile.n_cp_samples());
  const std::size_t n = static_cast<std::size_t>(profile.n_fft);
  if (tf.samples.size() != n_cp + n) {
    throw std::invalid_argument("ofdm_demodulate: expected " + std::to_string(n_cp + n) +
                                " samples, got " + std::to_string(tf.samples.size()));
  }
  SpectrumFrame frame;
  frame.bins.assign(tf.samples.begin() + static_cast<std::ptrdiff_t>(n_cp), tf.samples.end());
  fft_unitary(frame.bins, /*inverse=*/false);
  return frame;
}

}  // namespace wlansim
