#include "channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "units.hpp"

namespace wlansim {

double FadingRealization::gain_sum() const {
  double g = 0.0;
  for (int i = 0; i < n_tx * n_rx; ++i) g += std::norm(coeffs[static_cast<std::size_t>(i)]);
  return g;
}

FadingRealization sample_fading(RandomStream& rng, int n_tx, int n_rx, FadingModel model) {
  if (n_tx < 1 || n_tx > 2 || n_rx < 1 || n_rx > 2) {
    throw std::invalid_argument("sample_fading: antenna counts must be 1 or 2");
  }
  FadingRealization h;
  h.n_tx = n_tx;
  h.n_rx = n_rx;
  for (int i = 0; i < n_tx * n_rx; ++i) {
    h.coeffs[static_cast<std::size_t>(i)] =
        model == FadingModel::Identity ? Cplx{1.0, 0.0} : rng.next_cgauss(1.0);
  }
  return h;
}

std::vector<TimeFrame> apply_channel(std::span<const TimeFrame> tx_frames,
                                     const FadingRealization& h) {
  if (tx_frames.size() != static_cast<std::size_t>(h.n_tx)) {
    throw std::invalid_argument("apply_channel: frame count does not match n_tx");
  }
  const std::size_t len = tx_frames[0].samples.size();
  for (const auto& f : tx_frames) {
    if (f.samples.size() != len) {
      throw std::invalid_argument("apply_channel: frame lengths differ across antennas");
    }
  }
  std::vector<TimeFrame> rx(static_cast<std::size_t>(h.n_rx));
  for (int j = 0; j < h.n_rx; ++j) {
    rx[static_cast<std::size_t>(j)].samples.assign(len, Cplx{0.0, 0.0});
    for (int i = 0; i < h.n_tx; ++i) {
      const Cplx hij = h.at(i, j);
      const auto& src = tx_frames[static_cast<std::size_t>(i)].samples;
      auto& dst = rx[static_cast<std::size_t>(j)].samples;
      for (std::size_t k = 0; k < len; ++k) dst[k] += hij * src[k];
    }
  }
  return rx;
}

const char* scenario_name(Scenario s) {
  return s == Scenario::BothInterfered ? "both_interfered" : "n_only";
}

double noise_variance_for(double eb_n0_db, const OfdmProfile& profile) {
  const double offset_db = es_eb_offset_db(profile);
  const double es_n0 = db_to_linear(eb_n0_db + offset_db);
  // Equals 1/(Eb/N0 linear): the dilution cancels once the waveform itself
  // spends energy on guard bins and the cyclic prefix.
  return db_to_linear(offset_db) / es_n0;
}

InterferenceSchedule::InterferenceSchedule(const InterferenceModel& model, RandomStream rng)
    : model_(model), rng_(rng) {
  if (model_.burst_length_bits < 1) {
    throw std::invalid_argument("interference burst_length_bits must be >= 1");
  }
  if (model_.mode == InterferenceMode::Periodic && model_.period_bits < 1) {
    throw std::invalid_argument("interference period_bits must be >= 1");
  }
  if (model_.mode == InterferenceMode::Poisson && !(model_.mean_interarrival_bits > 0.0)) {
    throw std::invalid_argument("interference mean_interarrival_bits must be > 0");
  }
}

void InterferenceSchedule::extend_to(uint64_t bit_index) {
  // Keep sampling until the last start is strictly beyond the query point,
  // so a later burst can never retroactively cover it.
  while (starts_.empty() || starts_.back() <= bit_index) {
    double u = rng_.uniform01();
    while (u <= 0.0) u = rng_.uniform01();
    clock_ += -model_.mean_interarrival_bits * std::log(u);
    const auto start = static_cast<uint64_t>(std::floor(clock_));
    if (!starts_.empty() && start <= starts_.back()) {
      starts_.push_back(starts_.back() + 1);
    } else {
      starts_.push_back(start);
    }
  }
}

bool InterferenceSchedule::active(uint64_t bit_index) { return any_active(bit_index, 1); }

bool InterferenceSchedule::any_active(uint64_t first, uint64_t count) {
  if (count == 0) return false;
  switch (model_.mode) {
    case InterferenceMode::Off:
      return false;
    case InterferenceMode::Periodic: {
      const uint64_t period = model_.period_bits;
      const uint64_t burst = std::min(model_.burst_length_bits, period);
      if (count >= period) return true;
      const uint64_t r = first % period;
      return r < burst || r + count > period;
    }
    case InterferenceMode::Poisson: {
      extend_to(first + count - 1);
      // Bursts share one length, so only the latest start at or before the
      // span's end can cover any of it.
      auto it = std::upper_bound(starts_.begin(), starts_.end(), first + count - 1);
      if (it == starts_.begin()) return false;
      const uint64_t start = *std::prev(it);
      return start + model_.burst_length_bits > first;
    }
  }
  return false;
}

namespace {

void add_awgn(TimeFrame& frame, double variance, RandomStream& rng) {
  for (auto& s : frame.samples) s += rng.next_cgauss(variance);
}

}  // namespace

void apply_noise_and_interference(std::span<TimeFrame> rx_frames, double n0,
                                  const InterferenceModel& model, Standard standard,
                                  InterferenceSchedule& schedule, uint64_t span_first,
                                  uint64_t span_count, RandomStream& noise_rng,
                                  RandomStream& interference_rng) {
  if (n0 < 0.0) throw std::invalid_argument("noise variance must be >= 0");
  if (n0 > 0.0) {
    for (auto& f : rx_frames) add_awgn(f, n0, noise_rng);
  }

  const bool suppressed = model.mode == InterferenceMode::Off ||
                          (model.scenario == Scenario::NOnly && standard == Standard::G);
  if (suppressed || !schedule.any_active(span_first, span_count)) return;

  const double extra =
      n0 * db_to_linear(model.interferer_to_noise_db) * model.overlap_fraction;
  if (extra <= 0.0) return;
  for (auto& f : rx_frames) add_awgn(f, extra, interference_rng);
}

}  // namespace wlansim
