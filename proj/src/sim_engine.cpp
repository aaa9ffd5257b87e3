#include "sim_engine.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "analytic.hpp"
#include "mimo_stbc.hpp"
#include "ofdm_modem.hpp"
#include "rng.hpp"
#include "units.hpp"

namespace wlansim {

void validate(const LinkConfig& cfg) {
  if (cfg.packet_length_bits < 1) {
    throw std::invalid_argument("packet_length_bits must be >= 1");
  }
  if (cfg.stop.min_bit_errors < 1) {
    throw std::invalid_argument("stop.min_bit_errors must be >= 1");
  }
  if (cfg.stop.max_bits < cfg.packet_length_bits) {
    throw std::invalid_argument("stop.max_bits must be >= packet_length_bits");
  }
  const auto& m = cfg.interference;
  if (m.burst_length_bits < 1) {
    throw std::invalid_argument("interference.burst_length_bits must be >= 1");
  }
  if (m.mode == InterferenceMode::Periodic && m.period_bits < 1) {
    throw std::invalid_argument("interference.period_bits must be >= 1");
  }
  if (m.mode == InterferenceMode::Poisson && !(m.mean_interarrival_bits > 0.0)) {
    throw std::invalid_argument("interference.mean_interarrival_bits must be > 0");
  }
  if (m.overlap_fraction < 0.0 || m.overlap_fraction > 1.0) {
    throw std::invalid_argument("interference.overlap_fraction must be in [0,1]");
  }
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void fill_bits(RandomStream& rng, std::vector<uint8_t>& bits) {
  std::size_t i = 0;
  while (i < bits.size()) {
    uint64_t w = rng.next_u64();
    for (int b = 0; b < 64 && i < bits.size(); ++b, ++i) {
      bits[i] = static_cast<uint8_t>(w & 1u);
      w >>= 1;
    }
  }
}

struct PointContext {
  const LinkConfig& cfg;
  const OfdmProfile& profile;
  FadingModel fading_model;
  double n0;
  RandomStream fading_rng;
  RandomStream noise_rng;
  RandomStream interference_rng;
  InterferenceSchedule schedule;
  int64_t block_counter = 0;
};

// One SISO OFDM symbol through the chain; returns bit errors among the
// first payload_count slots.
uint64_t simulate_g_frame(PointContext& ctx, std::span<const uint8_t> slot_bits,
                          std::size_t payload_count, uint64_t global_first) {
  const auto symbols = bpsk_map(slot_bits);
  const auto tx = ofdm_modulate(subcarrier_map(symbols, ctx.profile), ctx.profile);

  FadingRealization h = sample_fading(ctx.fading_rng, 1, 1, ctx.fading_model);
  h.block_index = ctx.block_counter++;
  auto rx = apply_channel(std::span<const TimeFrame>(&tx, 1), h);
  apply_noise_and_interference(rx, ctx.n0, ctx.cfg.interference, ctx.cfg.standard, ctx.schedule,
                               global_first, payload_count, ctx.noise_rng,
                               ctx.interference_rng);

  auto bins = subcarrier_extract(ofdm_demodulate(rx[0], ctx.profile), ctx.profile);
  const Cplx h00 = h.at(0, 0);
  for (auto& y : bins) y /= h00;  // zero-forcing with perfect CSI
  const auto rx_bits = bpsk_demap(bins);

  uint64_t errors = 0;
  for (std::size_t i = 0; i < payload_count; ++i) {
    errors += rx_bits[i] != slot_bits[i];
  }
  return errors;
}

// One Alamouti block (two OFDM symbol periods, two antennas each way).
uint64_t simulate_n_block(PointContext& ctx, std::span<const uint8_t> slot_bits,
                          std::size_t payload_count, uint64_t global_first) {
  const auto& prof = ctx.profile;
  const std::size_t n_sc = static_cast<std::size_t>(prof.n_data_subcarriers());
  const auto symbols = bpsk_map(slot_bits);

  // Per (period, antenna) subcarrier vectors; total power is split evenly
  // across the two antennas so the pair radiates as much as the SISO link.
  std::array<std::array<std::vector<Cplx>, 2>, 2> lanes;
  for (auto& period : lanes) {
    for (auto& lane : period) lane.resize(n_sc);
  }
  for (std::size_t j = 0; j < n_sc; ++j) {
    const StbcCodeword cw =
        stbc_encode(symbols[2 * j] * kInvSqrt2, symbols[2 * j + 1] * kInvSqrt2);
    for (int t = 0; t < 2; ++t) {
      for (int a = 0; a < 2; ++a) {
        lanes[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)][j] =
            cw.tx[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)];
      }
    }
  }

  FadingRealization h = sample_fading(ctx.fading_rng, 2, 2, ctx.fading_model);
  h.block_index = ctx.block_counter++;

  // Constant channel across the two periods of the codeword.
  std::array<std::vector<TimeFrame>, 2> rx;
  for (int t = 0; t < 2; ++t) {
    std::array<TimeFrame, 2> tx = {
        ofdm_modulate(subcarrier_map(lanes[static_cast<std::size_t>(t)][0], prof), prof),
        ofdm_modulate(subcarrier_map(lanes[static_cast<std::size_t>(t)][1], prof), prof)};
    rx[static_cast<std::size_t>(t)] = apply_channel(tx, h);
  }

  // A burst anywhere in the block's bit span corrupts both periods.
  for (int t = 0; t < 2; ++t) {
    apply_noise_and_interference(rx[static_cast<std::size_t>(t)], ctx.n0, ctx.cfg.interference,
                                 ctx.cfg.standard, ctx.schedule, global_first, payload_count,
                                 ctx.noise_rng, ctx.interference_rng);
  }

  std::array<std::array<std::vector<Cplx>, 2>, 2> bins;  // [period][rx antenna]
  for (int t = 0; t < 2; ++t) {
    for (int r = 0; r < 2; ++r) {
      bins[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] = subcarrier_extract(
          ofdm_demodulate(rx[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)], prof),
          prof);
    }
  }

  uint64_t errors = 0;
  for (std::size_t j = 0; j < n_sc; ++j) {
    const std::array<std::array<Cplx, 2>, 2> rxj = {
        std::array<Cplx, 2>{bins[0][0][j], bins[0][1][j]},
        std::array<Cplx, 2>{bins[1][0][j], bins[1][1][j]}};
    const CombinerOutput out = stbc_combine(rxj, h);
    const uint8_t b0 = out.estimates[0].real() < 0.0 ? 1 : 0;
    const uint8_t b1 = out.estimates[1].real() < 0.0 ? 1 : 0;
    if (2 * j < payload_count) errors += b0 != slot_bits[2 * j];
    if (2 * j + 1 < payload_count) errors += b1 != slot_bits[2 * j + 1];
  }
  return errors;
}

}  // namespace

MetricRecord run_point(const LinkConfig& cfg, double eb_n0_db, uint64_t point_index) {
  validate(cfg);
  const OfdmProfile& profile = profile_for(cfg.standard);
  const FadingModel fading_model =
      cfg.channel == ChannelKind::AwgnIdentity ? FadingModel::Identity : FadingModel::Rayleigh;

  PointContext ctx{
      cfg,
      profile,
      fading_model,
      noise_variance_for(eb_n0_db, profile),
      RandomStream(derive_key({cfg.master_seed, point_index, kStreamFading})),
      RandomStream(derive_key({cfg.master_seed, point_index, kStreamNoise})),
      RandomStream(derive_key({cfg.master_seed, point_index, kStreamInterferenceNoise})),
      InterferenceSchedule(
          cfg.interference,
          RandomStream(derive_key({cfg.master_seed, point_index, kStreamInterferenceSchedule}))),
  };

  const uint64_t bits_per_block = static_cast<uint64_t>(bits_per_ofdm_symbol(profile));
  const uint64_t packet_bits = cfg.packet_length_bits;
  const uint64_t frames_per_packet = (packet_bits + bits_per_block - 1) / bits_per_block;
  const uint64_t slots = frames_per_packet * bits_per_block;

  uint64_t bits = 0, bit_errors = 0, packets = 0, packet_errors = 0;
  std::vector<uint8_t> tx_bits(slots);

  while (bit_errors < cfg.stop.min_bit_errors && bits < cfg.stop.max_bits) {
    RandomStream payload(derive_key({cfg.master_seed, point_index, kStreamPayload, packets}));
    fill_bits(payload, tx_bits);

    uint64_t packet_bit_errors = 0;
    for (uint64_t f = 0; f < frames_per_packet; ++f) {
      const uint64_t offset = f * bits_per_block;
      // Slots past the packet payload are padding: transmitted, never counted.
      const std::size_t payload_count = static_cast<std::size_t>(
          offset < packet_bits ? std::min(bits_per_block, packet_bits - offset) : 0);
      const uint64_t global_first = packets * packet_bits + offset;
      const std::span<const uint8_t> frame_bits(tx_bits.data() + offset,
                                                static_cast<std::size_t>(bits_per_block));
      packet_bit_errors += cfg.standard == Standard::G
                               ? simulate_g_frame(ctx, frame_bits, payload_count, global_first)
                               : simulate_n_block(ctx, frame_bits, payload_count, global_first);
    }

    bit_errors += packet_bit_errors;
    packet_errors += packet_bit_errors > 0 ? 1 : 0;
    bits += packet_bits;
    ++packets;
  }

  MetricRecord rec;
  rec.standard = cfg.standard;
  rec.scenario = cfg.interference.scenario;
  rec.eb_n0_db = eb_n0_db;
  rec.bits_simulated = bits;
  rec.bit_errors = bit_errors;
  rec.packets = packets;
  rec.packet_errors = packet_errors;
  rec.ber = bits > 0 ? static_cast<double>(bit_errors) / static_cast<double>(bits) : 0.0;
  rec.per = packets > 0 ? static_cast<double>(packet_errors) / static_cast<double>(packets) : 0.0;
  rec.throughput_bps = throughput_bps(profile.phy_bit_rate_bps, rec.per);
  rec.seed = derive_key({cfg.master_seed, point_index, kStreamPointSeed});
  return rec;
}

std::vector<MetricRecord> sweep(const LinkConfig& cfg, std::span<const double> eb_n0_points,
                                int n_threads) {
  validate(cfg);
  if (eb_n0_points.empty()) throw std::invalid_argument("sweep: eb_n0_points must be nonempty");

  std::vector<MetricRecord> records(eb_n0_points.size());
  unsigned workers = n_threads > 0 ? static_cast<unsigned>(n_threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(eb_n0_points.size()));

  if (workers <= 1) {
    for (std::size_t i = 0; i < eb_n0_points.size(); ++i) {
      records[i] = run_point(cfg, eb_n0_points[i], i);
    }
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < eb_n0_points.size(); i = next.fetch_add(1)) {
        records[i] = run_point(cfg, eb_n0_points[i], i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return records;
}

std::vector<MetricRecord> compare_scenarios(const LinkConfig& g_cfg, const LinkConfig& n_cfg,
                                            std::span<const double> eb_n0_points,
                                            int n_threads) {
  if (g_cfg.standard != Standard::G || n_cfg.standard != Standard::N) {
    throw std::invalid_argument("compare_scenarios: expects a (g, n) config pair");
  }
  if (g_cfg.master_seed != n_cfg.master_seed ||
      g_cfg.stop.min_bit_errors != n_cfg.stop.min_bit_errors ||
      g_cfg.stop.max_bits != n_cfg.stop.max_bits ||
      g_cfg.interference.scenario != n_cfg.interference.scenario) {
    throw std::invalid_argument(
        "compare_scenarios: configs must share scenario, seed and stop rule");
  }

  std::vector<MetricRecord> all;
  all.reserve(4 * eb_n0_points.size());
  for (Scenario sc : {Scenario::BothInterfered, Scenario::NOnly}) {
    for (const LinkConfig* base : {&g_cfg, &n_cfg}) {
      LinkConfig cfg = *base;
      cfg.interference.scenario = sc;
      auto recs = sweep(cfg, eb_n0_points, n_threads);
      all.insert(all.end(), recs.begin(), recs.end());
    }
  }
  return all;
}

}  // namespace wlansim
