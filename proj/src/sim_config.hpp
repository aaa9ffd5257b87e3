// Structured-text run configuration: flat key-value sections, presets for
// the standard experiments, range expansion and override handling.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sim_engine.hpp"

namespace wlansim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  LinkConfig g;
  LinkConfig n;
  std::vector<double> eb_n0_points;
  bool run_both_scenarios = false;  // sweep.scenario = both
};

// Sections: [sweep] (points, seed, scenario), [g] and [n] (channel,
// packet_length_bits, min_bit_errors, max_bits, interference, period_bits,
// mean_interarrival_bits, burst_length_bits, interferer_to_noise_db,
// overlap_fraction). '#' and ';' start comments. Unknown sections or keys
// are rejected with a diagnostic naming them.
SweepSpec parse_config(const std::string& text);

// fig6: g vs n over Rayleigh, interference off.
// fig7/fig8/fig9: the same comparison with periodic 802.15.4 interference
//   (period 24 bits for g, 120 for n, burst 1 bit, INR +10 dB).
// fig10: the fig7 experiment with Poisson burst arrivals.
SweepSpec preset_config(const std::string& name);
const std::vector<std::string>& preset_names();
const std::string& preset_text(const std::string& name);

// Applies "section.key=value" style overrides on top of a parsed spec.
void apply_override(SweepSpec& spec, const std::string& key, const std::string& value);

// "start:step:stop" (inclusive) or comma-separated values.
std::vector<double> parse_point_range(const std::string& text);

}  // namespace wlansim
