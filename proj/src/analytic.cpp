#include "analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "mimo_stbc.hpp"

namespace wlansim {

double ber_bpsk_awgn(double eb_n0_linear) {
  if (eb_n0_linear < 0.0) throw std::invalid_argument("eb_n0_linear must be >= 0");
  return 0.5 * std::erfc(std::sqrt(eb_n0_linear));
}

double ser_bpsk_awgn(double es_n0_linear) {
  if (es_n0_linear < 0.0) throw std::invalid_argument("es_n0_linear must be >= 0");
  return 0.5 * std::erfc(std::sqrt(es_n0_linear));
}

double ber_bpsk_mimo_semianalytic(double eb_n0_linear, uint64_t n_draws, RandomStream& rng) {
  if (n_draws < 1) throw std::invalid_argument("n_draws must be >= 1");
  if (!(eb_n0_linear > 0.0)) throw std::invalid_argument("eb_n0_linear must be > 0");
  double acc = 0.0;
  for (uint64_t i = 0; i < n_draws; ++i) {
    const FadingRealization h = sample_fading(rng, 2, 2, FadingModel::Rayleigh);
    acc += ber_bpsk_awgn(post_combining_ebn0(h, eb_n0_linear) / 2.0);
  }
  return acc / static_cast<double>(n_draws);
}

double sinr_db(const NoiseBudget& budget) {
  const double denom = budget.p_noise + budget.p_interferer;
  if (!(denom > 0.0)) {
    throw std::invalid_argument("sinr_db: noise + interferer power must be > 0");
  }
  return 10.0 * std::log10(budget.p_signal / denom);
}

double per_from_ber(double ber, uint64_t packet_length_bits) {
  if (ber < 0.0 || ber > 1.0) throw std::invalid_argument("ber must be in [0,1]");
  if (packet_length_bits < 1) throw std::invalid_argument("packet_length_bits must be >= 1");
  return 1.0 - std::pow(1.0 - ber, static_cast<double>(packet_length_bits));
}

double throughput_bps(double phy_rate_bps, double per) {
  if (per < 0.0 || per > 1.0) throw std::invalid_argument("per must be in [0,1]");
  return phy_rate_bps * (1.0 - per);
}

}  // namespace wlansim
