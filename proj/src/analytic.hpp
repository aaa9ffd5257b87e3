// Closed-form error-rate and SINR formulas plus the PER / throughput
// mappings used both in reports and as oracles for the Monte Carlo engine.
#pragma once

#include <cstdint>

#include "channel_model.hpp"
#include "rng.hpp"

namespace wlansim {

// 0.5 * erfc(sqrt(Eb/N0)); strictly decreasing, 0.5 at zero SNR.
double ber_bpsk_awgn(double eb_n0_linear);

// Same functional form with the symbol-energy argument.
double ser_bpsk_awgn(double es_n0_linear);

// Average of 0.5 * erfc(sqrt(gain * Eb/N0 / 2)) over Rayleigh 2x2 draws,
// where gain is the post-combining channel gain; the /2 accounts for the
// equal transmit power split across the two antennas.
double ber_bpsk_mimo_semianalytic(double eb_n0_linear, uint64_t n_draws, RandomStream& rng);

// 10*log10(P_c / (P_N + P_i)); throws std::invalid_argument when the
// denominator is not positive.
double sinr_db(const NoiseBudget& budget);

// 1 - (1 - ber)^L, independent bit errors.
double per_from_ber(double ber, uint64_t packet_length_bits);

// Goodput fraction of the PHY rate.
double throughput_bps(double phy_rate_bps, double per);

}  // namespace wlansim
