#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "csv_io.hpp"
#include "sim_config.hpp"

using namespace wlansim;

namespace {

const std::string kMinimalConfig = R"(
[sweep]
points = 0:2:20
seed = 7

[g]
channel = rayleigh

[n]
channel = rayleigh
)";

MetricRecord sample_record() {
  MetricRecord r;
  r.standard = Standard::N;
  r.scenario = Scenario::BothInterfered;
  r.eb_n0_db = 6.0;
  r.bits_simulated = 1000448;
  r.bit_errors = 1234;
  r.packets = 977;
  r.packet_errors = 321;
  r.ber = static_cast<double>(r.bit_errors) / static_cast<double>(r.bits_simulated);
  r.per = static_cast<double>(r.packet_errors) / static_cast<double>(r.packets);
  r.throughput_bps = 30e6 * (1.0 - r.per);
  r.seed = 987654321;
  return r;
}

}  // namespace

TEST_CASE("points range expansion") {
  const auto pts = parse_point_range("0:2:20");
  REQUIRE(pts.size() == 11);
  CHECK(pts.front() == 0.0);
  CHECK(pts[1] == 2.0);
  CHECK(pts.back() == 20.0);

  const auto listed = parse_point_range("1.5, 3, 7");
  REQUIRE(listed.size() == 3);
  CHECK(listed[0] == 1.5);
  CHECK(listed[2] == 7.0);

  CHECK(parse_point_range("5").size() == 1);
  CHECK_THROWS_AS(parse_point_range("5:0:10"), ConfigError);
  CHECK_THROWS_AS(parse_point_range("10:1:5"), ConfigError);
  CHECK_THROWS_AS(parse_point_range(""), ConfigError);
  CHECK_THROWS_AS(parse_point_range("a:b:c"), ConfigError);
}

TEST_CASE("minimal config applies defaults") {
  const auto spec = parse_config(kMinimalConfig);
  CHECK(spec.eb_n0_points.size() == 11);
  CHECK(spec.g.standard == Standard::G);
  CHECK(spec.n.standard == Standard::N);
  CHECK(spec.g.master_seed == 7);
  CHECK(spec.n.master_seed == 7);
  CHECK(spec.g.packet_length_bits == 1024);
  CHECK(spec.g.stop.min_bit_errors == 100);
  CHECK(spec.g.stop.max_bits == 10'000'000);
  CHECK(spec.g.interference.mode == InterferenceMode::Off);
  // Interval presets differ per standard.
  CHECK(spec.g.interference.period_bits == 24);
  CHECK(spec.n.interference.period_bits == 120);
  CHECK(spec.g.interference.interferer_to_noise_db == doctest::Approx(10.0));
  CHECK(spec.g.interference.overlap_fraction == doctest::Approx(1.0));
  CHECK_FALSE(spec.run_both_scenarios);
}

TEST_CASE("empty document lists the missing required key") {
  CHECK_THROWS_WITH_AS(parse_config(""),
                       "missing required key: sweep.points (e.g. points = 0:2:20)", ConfigError);
}

TEST_CASE("unknown keys and sections are named in diagnostics") {
  CHECK_THROWS_WITH_AS(parse_config("[sweep]\npoints = 0:2:4\nfoo = 1\n[g]\n[n]\n"),
                       "unknown key 'sweep.foo'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[sweep]\npoints=1\n[g]\nbandwidth = 22\n[n]\n"),
                       "unknown key 'g.bandwidth'", ConfigError);
  CHECK_THROWS_AS(parse_config("[links]\nchannel = rayleigh\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("points = 1\n"), ConfigError);  // key outside a section
}

TEST_CASE("out-of-range values name the key and the accepted range") {
  const std::string bad_overlap = "[sweep]\npoints=1\n[g]\noverlap_fraction = 1.5\n[n]\n";
  CHECK_THROWS_WITH_AS(parse_config(bad_overlap), "g.overlap_fraction: must be in [0,1]",
                       ConfigError);
  CHECK_THROWS_AS(parse_config("[sweep]\npoints=1\n[g]\nchannel = awgn2\n[n]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[sweep]\npoints=1\n[g]\nmax_bits = -4\n[n]\n"), ConfigError);
}

TEST_CASE("fig presets expand to the interfered comparison") {
  const auto spec = preset_config("fig7");
  CHECK(spec.eb_n0_points.size() == 11);
  CHECK(spec.g.channel == ChannelKind::Rayleigh);
  CHECK(spec.n.channel == ChannelKind::Rayleigh);
  CHECK(spec.g.interference.mode == InterferenceMode::Periodic);
  CHECK(spec.g.interference.period_bits == 24);
  CHECK(spec.n.interference.period_bits == 120);
  CHECK(spec.g.interference.burst_length_bits == 1);
  CHECK(spec.g.interference.interferer_to_noise_db == doctest::Approx(10.0));
  CHECK(spec.g.interference.scenario == Scenario::BothInterfered);

  const auto clean = preset_config("fig6");
  CHECK(clean.g.interference.mode == InterferenceMode::Off);

  const auto poisson = preset_config("fig10");
  CHECK(poisson.g.interference.mode == InterferenceMode::Poisson);
  CHECK(poisson.g.interference.mean_interarrival_bits == doctest::Approx(24.0));
  CHECK(poisson.n.interference.mean_interarrival_bits == doctest::Approx(120.0));

  CHECK(preset_names().size() == 5);
  CHECK_THROWS_AS(preset_config("fig11"), ConfigError);
}

TEST_CASE("overrides rewrite single keys") {
  auto spec = parse_config(kMinimalConfig);
  apply_override(spec, "g.max_bits", "123904");
  CHECK(spec.g.stop.max_bits == 123904);
  apply_override(spec, "sweep.points", "0:5:10");
  CHECK(spec.eb_n0_points.size() == 3);
  apply_override(spec, "sweep.scenario", "both");
  CHECK(spec.run_both_scenarios);
  CHECK_THROWS_AS(apply_override(spec, "nosection", "1"), ConfigError);
  CHECK_THROWS_AS(apply_override(spec, "g.unknown", "1"), ConfigError);
}

TEST_CASE("csv emission is pinned and byte-stable") {
  const MetricRecord r = sample_record();
  const std::string csv = records_to_csv(std::span<const MetricRecord>(&r, 1));

  const auto newline = csv.find('\n');
  CHECK(csv.substr(0, newline) ==
        "standard,scenario,ebno_db,bits,bit_errors,packets,packet_errors,ber,per,"
        "throughput_bps,seed");
  // Exactly two lines.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.find("n,both_interfered,6,1000448,1234,977,321,") != std::string::npos);
  CHECK(csv == records_to_csv(std::span<const MetricRecord>(&r, 1)));

  MetricRecord perfect;
  perfect.standard = Standard::N;
  perfect.throughput_bps = 30e6;
  const std::string row = records_to_csv(std::span<const MetricRecord>(&perfect, 1));
  CHECK(row.find(",30000000,") != std::string::npos);
}

TEST_CASE("csv numeric fields round trip at printed precision") {
  const MetricRecord r = sample_record();
  const std::string csv = records_to_csv(std::span<const MetricRecord>(&r, 1));
  const std::string row = csv.substr(csv.find('\n') + 1);

  std::vector<std::string> fields;
  std::string cur;
  for (char c : row) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\n') {
      cur += c;
    }
  }
  fields.push_back(cur);
  REQUIRE(fields.size() == 11);

  CHECK(std::stoull(fields[3]) == r.bits_simulated);
  CHECK(std::stoull(fields[4]) == r.bit_errors);
  // 9 significant digits keep the ratios within half an ulp of the print.
  CHECK(std::abs(std::stod(fields[7]) - r.ber) <= 5e-10);
  CHECK(std::abs(std::stod(fields[8]) - r.per) <= 5e-10);
  CHECK(std::abs(std::stod(fields[9]) - r.throughput_bps) < 0.5);
  CHECK(std::stoull(fields[10]) == r.seed);
}

TEST_CASE("file writes refuse to clobber without force") {
  const auto dir = std::filesystem::temp_directory_path() / "wlansim_csv_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.csv").string();
  std::filesystem::remove(path);

  write_file_checked(path, "first\n", false);
  CHECK_THROWS_AS(write_file_checked(path, "second\n", false), IoError);
  write_file_checked(path, "second\n", true);

  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "second\n");
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(write_file_checked("/nonexistent-dir/x/y.csv", "x", true), IoError);
}

TEST_CASE("spectrum report annotates the conventional three-channel figure") {
  const std::vector<WlanDeployment> deps = {{1, WlanWidth::Occupied22},
                                            {6, WlanWidth::Occupied22},
                                            {11, WlanWidth::Occupied22}};
  const auto report = spectrum_report(deps);
  CHECK(report.free_channels == std::vector<int>{25, 26});
  CHECK(report.text.find("free channels: 25 26") != std::string::npos);
  // The computed set disagrees with the conventional figure of three.
  CHECK(report.text.find("conventionally quotes 3 channels") != std::string::npos);
  CHECK(report.text.find("leaves 2") != std::string::npos);
  CHECK(report.csv.find("25,2475.0,2473.5,2476.5,1,,0\n") != std::string::npos);

  const auto empty = spectrum_report({});
  CHECK(empty.free_channels.size() == 16);

  const std::vector<WlanDeployment> wide = {{1, WlanWidth::Wide40, Extension::Above},
                                            {9, WlanWidth::Wide40, Extension::Above}};
  const auto covered = spectrum_report(wide);
  CHECK(covered.free_channels.empty());
  CHECK(covered.text.find("free channels: (none)") != std::string::npos);
}
