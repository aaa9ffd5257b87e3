// Command-line front end. Talks to the simulator exclusively through the
// shared library's C API.
//
// Subcommands:
//   sweep    --config <path> | --preset figN  [--out csv] [--seed N]
//            [--set section.key=value ...] [--threads N] [--force]
//   analytic --standard g|n --ebno <range> [--out csv] [--draws N]
//            [--seed N] [--force]
//   spectrum --wlan <ch:width[:above|below]>[,...] [--out csv] [--force]
//
// Exit codes: 0 success, 2 configuration/usage error, 3 I/O error.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wlansim/wlansim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int exit_code_for(wlansim_status status) {
  switch (status) {
    case WLANSIM_OK:
      return kExitOk;
    case WLANSIM_ERROR_IO:
      return kExitIo;
    default:
      return kExitConfig;
  }
}

int fail(wlansim_status status) {
  std::fprintf(stderr, "wlansim: error: %s: %s\n", wlansim_status_name(status),
               wlansim_last_error());
  return exit_code_for(status);
}

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "wlansim: error: usage: %s\n", message.c_str());
  return kExitConfig;
}

struct ConfigHandle {
  wlansim_config* ptr = nullptr;
  ~ConfigHandle() { wlansim_config_free(ptr); }
};

struct ResultsHandle {
  wlansim_results* ptr = nullptr;
  ~ResultsHandle() { wlansim_results_free(ptr); }
};

struct ReportHandle {
  wlansim_spectrum_report* ptr = nullptr;
  ~ReportHandle() { wlansim_spectrum_report_free(ptr); }
};

int emit(const std::string& out_path, const char* content, bool force) {
  if (out_path.empty()) {
    std::fputs(content, stdout);
    return kExitOk;
  }
  const wlansim_status st = wlansim_write_file(out_path.c_str(), content, force ? 1 : 0);
  if (st != WLANSIM_OK) return fail(st);
  return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& preset,
              const std::vector<std::string>& overrides, bool seed_given, uint64_t seed,
              const std::string& out_path, int threads, bool force) {
  if (config_path.empty() && preset.empty()) {
    return fail_usage("sweep needs --config or --preset");
  }

  ConfigHandle cfg;
  wlansim_status st = WLANSIM_OK;
  if (!preset.empty()) {
    st = wlansim_config_preset(preset.c_str(), &cfg.ptr);
    if (st != WLANSIM_OK) return fail(st);
  }
  if (!config_path.empty()) {
    // A config file refines the preset when both are given.
    wlansim_config* from_file = nullptr;
    st = wlansim_config_load(config_path.c_str(), &from_file);
    if (st != WLANSIM_OK) return fail(st);
    if (cfg.ptr != nullptr) wlansim_config_free(cfg.ptr);
    cfg.ptr = from_file;
  }

  for (const auto& kv : overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      return fail_usage("--set expects section.key=value, got '" + kv + "'");
    }
    st = wlansim_config_set(cfg.ptr, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (st != WLANSIM_OK) return fail(st);
  }
  if (seed_given) {
    st = wlansim_config_set(cfg.ptr, "sweep.seed", std::to_string(seed).c_str());
    if (st != WLANSIM_OK) return fail(st);
  }

  ResultsHandle results;
  st = wlansim_sweep_run(cfg.ptr, threads, &results.ptr);
  if (st != WLANSIM_OK) return fail(st);
  if (!out_path.empty()) {
    st = wlansim_results_write_csv(results.ptr, out_path.c_str(), force ? 1 : 0);
    if (st != WLANSIM_OK) return fail(st);
    return kExitOk;
  }
  std::fputs(wlansim_results_csv(results.ptr), stdout);
  return kExitOk;
}

int run_analytic(const std::string& standard, const std::string& ebno_range, uint64_t draws,
                 uint64_t seed, const std::string& out_path, bool force) {
  if (standard != "g" && standard != "n") {
    return fail_usage("analytic --standard must be g or n");
  }
  size_t n = 0;
  wlansim_status st = wlansim_parse_ebno_range(ebno_range.c_str(), nullptr, 0, &n);
  if (st != WLANSIM_OK) return fail(st);
  std::vector<double> points(n), bers(n);
  st = wlansim_parse_ebno_range(ebno_range.c_str(), points.data(), points.size(), &n);
  if (st != WLANSIM_OK) return fail(st);

  st = wlansim_analytic_curve(standard[0], points.data(), points.size(), draws, seed,
                              bers.data());
  if (st != WLANSIM_OK) return fail(st);

  std::string csv = "standard,ebno_db,ber\n";
  char line[96];
  for (size_t i = 0; i < points.size(); ++i) {
    std::snprintf(line, sizeof(line), "%s,%.10g,%.9g\n", standard.c_str(), points[i], bers[i]);
    csv += line;
  }
  return emit(out_path, csv.c_str(), force);
}

bool parse_deployment(const std::string& item, wlansim_wlan_deployment& dep) {
  // ch[:width[:above|below]], width defaults to 22.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : item) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.empty() || parts.size() > 3) return false;
  try {
    dep.channel = std::stoi(parts[0]);
    dep.width_mhz = parts.size() > 1 ? std::stoi(parts[1]) : 22;
  } catch (const std::exception&) {
    return false;
  }
  dep.extend_below = 0;
  if (parts.size() == 3) {
    if (parts[2] == "below") {
      dep.extend_below = 1;
    } else if (parts[2] != "above") {
      return false;
    }
  }
  return true;
}

int run_spectrum(const std::string& wlan_list, const std::string& out_path, bool force) {
  std::vector<wlansim_wlan_deployment> deps;
  if (!wlan_list.empty()) {
    std::string cur;
    std::vector<std::string> items;
    for (char c : wlan_list) {
      if (c == ',') {
        items.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    items.push_back(cur);
    for (const auto& item : items) {
      wlansim_wlan_deployment dep{};
      if (!parse_deployment(item, dep)) {
        return fail_usage("--wlan expects ch[:width[:above|below]], got '" + item + "'");
      }
      deps.push_back(dep);
    }
  }

  ReportHandle report;
  const wlansim_status st =
      wlansim_spectrum_plan(deps.empty() ? nullptr : deps.data(), deps.size(), &report.ptr);
  if (st != WLANSIM_OK) return fail(st);

  std::fputs(wlansim_spectrum_report_text(report.ptr), stdout);
  if (!out_path.empty()) {
    return emit(out_path, wlansim_spectrum_report_csv(report.ptr), force);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"baseband link-level simulator: 802.11g vs 802.11n under 802.15.4 interference"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  auto* sweep = app.add_subcommand("sweep", "run the Monte Carlo Eb/N0 sweep");
  std::string config_path, preset, sweep_out;
  std::vector<std::string> overrides;
  uint64_t seed = 0;
  int threads = 0;
  bool force = false;
  sweep->add_option("--config", config_path, "config file path");
  sweep->add_option("--preset", preset, "preset name (fig6..fig10)");
  sweep->add_option("--out", sweep_out, "output CSV path (default: stdout)");
  auto* seed_opt = sweep->add_option("--seed", seed, "master seed override");
  sweep->add_option("--set", overrides, "override section.key=value (repeatable)");
  sweep->add_option("--threads", threads, "worker threads (0 = auto)");
  sweep->add_flag("--force", force, "overwrite an existing output file");

  auto* analytic = app.add_subcommand("analytic", "emit closed-form BER curves");
  std::string standard, ebno_range, analytic_out;
  uint64_t draws = 100000, analytic_seed = 1;
  bool analytic_force = false;
  analytic->add_option("--standard", standard, "g or n")->required();
  analytic->add_option("--ebno", ebno_range, "Eb/N0 points, start:step:stop or list")->required();
  analytic->add_option("--out", analytic_out, "output CSV path (default: stdout)");
  analytic->add_option("--draws", draws, "channel draws per point for the n curve");
  analytic->add_option("--seed", analytic_seed, "seed for the n curve");
  analytic->add_flag("--force", analytic_force, "overwrite an existing output file");

  auto* spectrum = app.add_subcommand("spectrum", "2.4 GHz overlap report");
  std::string wlan_list, spectrum_out;
  bool spectrum_force = false;
  spectrum->add_option("--wlan", wlan_list, "deployments, e.g. 1:22,6:22,11:22 or 3:40:above");
  spectrum->add_option("--out", spectrum_out, "output CSV path (default: text only)");
  spectrum->add_flag("--force", spectrum_force, "overwrite an existing output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "wlansim: error: usage: %s\n", e.what());
    return kExitConfig;
  }

  if (sweep->parsed()) {
    return run_sweep(config_path, preset, overrides, seed_opt->count() > 0, seed, sweep_out,
                     threads, force);
  }
  if (analytic->parsed()) {
    return run_analytic(standard, ebno_range, draws, analytic_seed, analytic_out,
                        analytic_force);
  }
  return run_spectrum(wlan_list, spectrum_out, spectrum_force);
}
