#include "sim_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace wlansim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(key + ": expected a nonnegative integer, got '" + value + "'");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(value, &pos);
    if (pos != value.size() || !std::isfinite(out)) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a finite number, got '" + value + "'");
  }
}

void set_sweep_key(SweepSpec& spec, const std::string& key, const std::string& value) {
  if (key == "points") {
    spec.eb_n0_points = parse_point_range(value);
  } else if (key == "seed") {
    const uint64_t seed = parse_u64("sweep.seed", value);
    spec.g.master_seed = seed;
    spec.n.master_seed = seed;
  } else if (key == "scenario") {
    if (value == "both_interfered") {
      spec.run_both_scenarios = false;
      spec.g.interference.scenario = Scenario::BothInterfered;
      spec.n.interference.scenario = Scenario::BothInterfered;
    } else if (value == "n_only") {
      spec.run_both_scenarios = false;
      spec.g.interference.scenario = Scenario::NOnly;
      spec.n.interference.scenario = Scenario::NOnly;
    } else if (value == "both") {
      spec.run_both_scenarios = true;
      spec.g.interference.scenario = Scenario::BothInterfered;
      spec.n.interference.scenario = Scenario::BothInterfered;
    } else {
      throw ConfigError("sweep.scenario: expected both_interfered, n_only or both, got '" +
                        value + "'");
    }
  } else {
    throw ConfigError("unknown key 'sweep." + key + "'");
  }
}

void set_link_key(LinkConfig& cfg, const std::string& section, const std::string& key,
                  const std::string& value) {
  const std::string full = section + "." + key;
  if (key == "channel") {
    if (value == "awgn") {
      cfg.channel = ChannelKind::AwgnIdentity;
    } else if (value == "rayleigh") {
      cfg.channel = ChannelKind::Rayleigh;
    } else {
      throw ConfigError(full + ": expected awgn or rayleigh, got '" + value + "'");
    }
  } else if (key == "packet_length_bits") {
    cfg.packet_length_bits = parse_u64(full, value);
    if (cfg.packet_length_bits < 1) throw ConfigError(full + ": must be >= 1");
  } else if (key == "min_bit_errors") {
    cfg.stop.min_bit_errors = parse_u64(full, value);
    if (cfg.stop.min_bit_errors < 1) throw ConfigError(full + ": must be >= 1");
  } else if (key == "max_bits") {
    cfg.stop.max_bits = parse_u64(full, value);
    if (cfg.stop.max_bits < 1) throw ConfigError(full + ": must be >= 1");
  } else if (key == "interference") {
    if (value == "off") {
      cfg.interference.mode = InterferenceMode::Off;
    } else if (value == "periodic") {
      cfg.interference.mode = InterferenceMode::Periodic;
    } else if (value == "poisson") {
      cfg.interference.mode = InterferenceMode::Poisson;
    } else {
      throw ConfigError(full + ": expected off, periodic or poisson, got '" + value + "'");
    }
  } else if (key == "period_bits") {
    cfg.interference.period_bits = parse_u64(full, value);
    if (cfg.interference.period_bits < 1) throw ConfigError(full + ": must be >= 1");
  } else if (key == "mean_interarrival_bits") {
    cfg.interference.mean_interarrival_bits = parse_double(full, value);
    if (!(cfg.interference.mean_interarrival_bits > 0.0)) {
      throw ConfigError(full + ": must be > 0");
    }
  } else if (key == "burst_length_bits") {
    cfg.interference.burst_length_bits = parse_u64(full, value);
    if (cfg.interference.burst_length_bits < 1) throw ConfigError(full + ": must be >= 1");
  } else if (key == "interferer_to_noise_db") {
    cfg.interference.interferer_to_noise_db = parse_double(full, value);
  } else if (key == "overlap_fraction") {
    cfg.interference.overlap_fraction = parse_double(full, value);
    if (cfg.interference.overlap_fraction < 0.0 || cfg.interference.overlap_fraction > 1.0) {
      throw ConfigError(full + ": must be in [0,1]");
    }
  } else {
    throw ConfigError("unknown key '" + full + "'");
  }
}

SweepSpec default_spec() {
  SweepSpec spec;
  spec.g.standard = Standard::G;
  spec.n.standard = Standard::N;
  // 802.15.4 at full 250 kbps rate hits every 24th g bit / 120th n bit.
  spec.g.interference.period_bits = 24;
  spec.g.interference.mean_interarrival_bits = 24.0;
  spec.n.interference.period_bits = 120;
  spec.n.interference.mean_interarrival_bits = 120.0;
  return spec;
}

void set_key(SweepSpec& spec, const std::string& section, const std::string& key,
             const std::string& value) {
  if (section == "sweep") {
    set_sweep_key(spec, key, value);
  } else if (section == "g") {
    set_link_key(spec.g, section, key, value);
  } else if (section == "n") {
    set_link_key(spec.n, section, key, value);
  } else {
    throw ConfigError("unknown section '[" + section + "]' (expected sweep, g or n)");
  }
}

void finish(SweepSpec& spec) {
  if (spec.eb_n0_points.empty()) {
    throw ConfigError("missing required key: sweep.points (e.g. points = 0:2:20)");
  }
  validate(spec.g);
  validate(spec.n);
}

}  // namespace

std::vector<double> parse_point_range(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ConfigError("sweep.points: empty point list");

  std::vector<double> points;
  if (s.find(':') != std::string::npos) {
    std::istringstream in(s);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) ||
        in.fail()) {
      throw ConfigError("sweep.points: expected start:step:stop, got '" + s + "'");
    }
    const double start = parse_double("sweep.points", trim(a));
    const double step = parse_double("sweep.points", trim(b));
    const double stop = parse_double("sweep.points", trim(c));
    if (!(step > 0.0)) throw ConfigError("sweep.points: step must be > 0");
    if (stop < start) throw ConfigError("sweep.points: stop must be >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10000) throw ConfigError("sweep.points: more than 10000 points");
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(start + step * static_cast<double>(i));
    return points;
  }

  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    points.push_back(parse_double("sweep.points", trim(item)));
  }
  if (points.empty()) throw ConfigError("sweep.points: empty point list");
  return points;
}

SweepSpec parse_config(const std::string& text) {
  SweepSpec spec = default_spec();
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header '" +
                          t + "'");
      }
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got '" + t +
                        "'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                        "' outside any section");
    }
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    set_key(spec, section, key, value);
  }
  finish(spec);
  return spec;
}

namespace {

const std::map<std::string, std::string>& preset_map() {
  static const std::map<std::string, std::string> presets = [] {
    std::map<std::string, std::string> m;
    m["fig6"] = R"(# g vs n over Rayleigh fading, no interference
[sweep]
points = 0:2:20
seed = 1

[g]
channel = rayleigh
interference = off

[n]
channel = rayleigh
interference = off
)";
    const std::string interfered = R"([sweep]
points = 0:2:20
seed = 1
scenario = both_interfered

[g]
channel = rayleigh
interference = periodic
period_bits = 24
burst_length_bits = 1
interferer_to_noise_db = 10
overlap_fraction = 1.0

[n]
channel = rayleigh
interference = periodic
period_bits = 120
burst_length_bits = 1
interferer_to_noise_db = 10
overlap_fraction = 1.0
)";
    m["fig7"] = "# g vs n under periodic 802.15.4 interference\n" + interfered;
    m["fig8"] = "# throughput view of the interfered comparison (n emphasis)\n" + interfered;
    m["fig9"] = "# throughput view of the interfered comparison (g emphasis)\n" + interfered;
    m["fig10"] = R"(# interfered comparison with Poisson burst arrivals
[sweep]
points = 0:2:20
seed = 1
scenario = both_interfered

[g]
channel = rayleigh
interference = poisson
mean_interarrival_bits = 24
burst_length_bits = 1
interferer_to_noise_db = 10
overlap_fraction = 1.0

[n]
channel = rayleigh
interference = poisson
mean_interarrival_bits = 120
burst_length_bits = 1
interferer_to_noise_db = 10
overlap_fraction = 1.0
)";
    return m;
  }();
  return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, text] : preset_map()) v.push_back(name);
    return v;
  }();
  return names;
}

const std::string& preset_text(const std::string& name) {
  const auto& m = preset_map();
  const auto it = m.find(name);
  if (it == m.end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
  }
  return it->second;
}

SweepSpec preset_config(const std::string& name) { return parse_config(preset_text(name)); }

void apply_override(SweepSpec& spec, const std::string& key, const std::string& value) {
  const std::size_t dot = key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= key.size()) {
    throw ConfigError("override key must look like section.key, got '" + key + "'");
  }
  set_key(spec, key.substr(0, dot), key.substr(dot + 1), value);
  finish(spec);
}

}  // namespace wlansim
