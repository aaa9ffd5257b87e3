// Monte Carlo harness: runs full transmit -> channel -> receive chains per
// Eb/N0 point, counts bit/packet errors and sweeps configurations.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "channel_model.hpp"
#include "phy_profiles.hpp"

namespace wlansim {

enum class ChannelKind { AwgnIdentity, Rayleigh };

struct StopRule {
  uint64_t min_bit_errors = 100;
  uint64_t max_bits = 10'000'000;
};

struct LinkConfig {
  Standard standard = Standard::G;
  ChannelKind channel = ChannelKind::Rayleigh;
  InterferenceModel interference;
  uint64_t packet_length_bits = 1024;
  StopRule stop;
  uint64_t master_seed = 1;
};

// Throws std::invalid_argument naming the offending field.
void validate(const LinkConfig& cfg);

struct MetricRecord {
  Standard standard = Standard::G;
  Scenario scenario = Scenario::BothInterfered;
  double eb_n0_db = 0.0;
  uint64_t bits_simulated = 0;
  uint64_t bit_errors = 0;
  uint64_t packets = 0;
  uint64_t packet_errors = 0;
  double ber = 0.0;
  double per = 0.0;
  double throughput_bps = 0.0;
  uint64_t seed = 0;

  bool operator==(const MetricRecord&) const = default;
};

// Simulates whole packets until the stop rule is met (>= min_bit_errors or
// >= max_bits). Deterministic in (cfg, eb_n0_db, point_index).
MetricRecord run_point(const LinkConfig& cfg, double eb_n0_db, uint64_t point_index = 0);

// One record per point, in input order. Per-point random streams are derived
// from (master_seed, point index), so parallel and serial execution produce
// identical results. n_threads <= 0 picks the hardware concurrency.
std::vector<MetricRecord> sweep(const LinkConfig& cfg, std::span<const double> eb_n0_points,
                                int n_threads = 0);

// Runs the G/N pair under scenario both_interfered and then n_only,
// emitting blocks [g both, n both, g n_only, n n_only]. The two configs must
// share scenario, seed and stop rule.
std::vector<MetricRecord> compare_scenarios(const LinkConfig& g_cfg, const LinkConfig& n_cfg,
                                            std::span<const double> eb_n0_points,
                                            int n_threads = 0);

}  // namespace wlansim
