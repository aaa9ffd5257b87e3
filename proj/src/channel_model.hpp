// Flat fading (identity / Rayleigh), AWGN, and the 802.15.4 interference
// burst process applied to transmitted frames.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ofdm_modem.hpp"
#include "rng.hpp"

namespace wlansim {

enum class FadingModel { Identity, Rayleigh };

// One block-fading realization for an n_tx x n_rx antenna grid.
// coeff(tx, rx) is stored at coeffs[tx * n_rx + rx].
struct FadingRealization {
  int n_tx = 1;
  int n_rx = 1;
  std::array<Cplx, 4> coeffs{};
  int64_t block_index = 0;

  Cplx at(int tx, int rx) const { return coeffs[static_cast<std::size_t>(tx * n_rx + rx)]; }
  // Sum of |coeff|^2 over the active antenna pairs.
  double gain_sum() const;
};

// identity -> all-ones; rayleigh -> i.i.d. CN(0,1) per coefficient.
FadingRealization sample_fading(RandomStream& rng, int n_tx, int n_rx, FadingModel model);

// rx_j = sum_i coeff(i,j) * tx_i, sample-wise (flat channel).
std::vector<TimeFrame> apply_channel(std::span<const TimeFrame> tx_frames,
                                     const FadingRealization& h);

enum class InterferenceMode { Off, Periodic, Poisson };
enum class Scenario { BothInterfered, NOnly };

const char* scenario_name(Scenario s);

struct InterferenceModel {
  InterferenceMode mode = InterferenceMode::Off;
  uint64_t period_bits = 24;            // periodic mode
  double mean_interarrival_bits = 24.0;  // poisson mode
  uint64_t burst_length_bits = 1;
  double interferer_to_noise_db = 10.0;  // P_i relative to P_N
  double overlap_fraction = 1.0;         // spectral overlap in [0,1]
  Scenario scenario = Scenario::BothInterfered;
};

// Power triple (P_c, P_N, P_i) feeding the SINR formula.
struct NoiseBudget {
  double p_signal = 0.0;
  double p_noise = 0.0;
  double p_interferer = 0.0;
};

// Per-complex-sample AWGN variance for a target Eb/N0, routed through the
// Es/N0 budget: with unitary transforms this puts the post-DFT data-bin SNR
// exactly at the Eb/N0 budget, so the measured BER lands on the closed form.
double noise_variance_for(double eb_n0_db, const OfdmProfile& profile);

// Burst schedule over payload bit indices. Periodic mode is computed
// directly; poisson mode pre-samples exponential interarrival start indices
// from its own stream, so queries are deterministic for a given seed.
class InterferenceSchedule {
 public:
  InterferenceSchedule(const InterferenceModel& model, RandomStream rng);

  bool active(uint64_t bit_index);
  // True iff any bit in [first, first + count) falls inside a burst.
  bool any_active(uint64_t first, uint64_t count);

 private:
  void extend_to(uint64_t bit_index);

  InterferenceModel model_;
  RandomStream rng_;
  std::vector<uint64_t> starts_;  // poisson burst starts, ascending
  double clock_ = 0.0;
};

// Adds complex AWGN of variance n0 to every sample of every frame; when the
// frame's payload bit span intersects an interference burst, additionally
// adds AWGN of variance n0 * 10^(INR/10) * overlap_fraction to the whole
// frame. Scenario NOnly suppresses interference for the g standard.
void apply_noise_and_interference(std::span<TimeFrame> rx_frames, double n0,
                                  const InterferenceModel& model, Standard standard,
                                  InterferenceSchedule& schedule, uint64_t span_first,
                                  uint64_t span_count, RandomStream& noise_rng,
                                  RandomStream& interference_rng);

}  // namespace wlansim
