// extern "C" surface of the shared library: opaque handles over the C++
// core, status codes, and a thread-local last-error message.
#include "wlansim/wlansim.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "analytic.hpp"
#include "csv_io.hpp"
#include "sim_config.hpp"
#include "sim_engine.hpp"
#include "spectrum_planner.hpp"
#include "units.hpp"

struct wlansim_config {
  wlansim::SweepSpec spec;
};

struct wlansim_results {
  std::vector<wlansim::MetricRecord> records;
  std::string csv;
};

struct wlansim_spectrum_report {
  wlansim::SpectrumReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
wlansim_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WLANSIM_OK;
  } catch (const wlansim::ConfigError& e) {
    set_error(e.what());
    return WLANSIM_ERROR_CONFIG;
  } catch (const wlansim::IoError& e) {
    set_error(e.what());
    return WLANSIM_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return WLANSIM_ERROR_INVALID_ARGUMENT;
  } catch (...) {
    set_error("unknown error");
    return WLANSIM_ERROR_INVALID_ARGUMENT;
  }
}

wlansim::Standard standard_from(char c) {
  if (c == 'g' || c == 'G') return wlansim::Standard::G;
  if (c == 'n' || c == 'N') return wlansim::Standard::N;
  throw std::invalid_argument(std::string("unknown standard '") + c + "' (expected 'g' or 'n')");
}

}  // namespace

extern "C" {

const char* wlansim_version(void) { return "1.0.0"; }

const char* wlansim_status_name(wlansim_status status) {
  switch (status) {
    case WLANSIM_OK:
      return "ok";
    case WLANSIM_ERROR_INVALID_ARGUMENT:
      return "invalid_argument";
    case WLANSIM_ERROR_CONFIG:
      return "config_error";
    case WLANSIM_ERROR_IO:
      return "io_error";
  }
  return "unknown";
}

const char* wlansim_last_error(void) { return g_last_error.c_str(); }

wlansim_status wlansim_profile_get(char standard, wlansim_profile_info* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("out must not be null");
    const auto& p = wlansim::profile_for(standard_from(standard));
    wlansim_profile_info info{};
    info.standard = standard_name(p.standard)[0];
    info.n_fft = p.n_fft;
    info.n_data_subcarriers = p.n_data_subcarriers();
    info.n_spatial_streams = p.n_spatial_streams;
    info.n_cp_samples = p.n_cp_samples();
    info.bits_per_symbol = wlansim::bits_per_ofdm_symbol(p);
    info.sample_rate_hz = p.sample_rate_hz;
    info.cp_duration_s = p.cp_duration_s;
    info.data_symbol_duration_s = p.data_symbol_duration_s();
    info.phy_bit_rate_bps = p.phy_bit_rate_bps;
    info.es_eb_offset_db = wlansim::es_eb_offset_db(p);
    *out = info;
  });
}

double wlansim_ber_bpsk_awgn_db(double ebno_db) {
  return wlansim::ber_bpsk_awgn(wlansim::db_to_linear(ebno_db));
}

double wlansim_per_from_ber(double ber, uint64_t packet_bits) {
  return wlansim::per_from_ber(ber, packet_bits);
}

double wlansim_throughput_bps(double phy_rate_bps, double per) {
  return wlansim::throughput_bps(phy_rate_bps, per);
}

wlansim_status wlansim_sinr_db(double p_signal, double p_noise, double p_interferer,
                               double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("out must not be null");
    *out = wlansim::sinr_db({p_signal, p_noise, p_interferer});
  });
}

wlansim_status wlansim_analytic_curve(char standard, const double* ebno_db, size_t n,
                                      uint64_t n_draws, uint64_t seed, double* ber_out) {
  return guarded([&] {
    if (ebno_db == nullptr || ber_out == nullptr) {
      throw std::invalid_argument("ebno_db and ber_out must not be null");
    }
    const wlansim::Standard s = standard_from(standard);
    for (size_t i = 0; i < n; ++i) {
      const double gamma = wlansim::db_to_linear(ebno_db[i]);
      if (s == wlansim::Standard::G) {
        ber_out[i] = wlansim::ber_bpsk_awgn(gamma);
      } else {
        wlansim::RandomStream rng(
            wlansim::derive_key({seed, i, wlansim::kStreamAnalytic}));
        ber_out[i] = wlansim::ber_bpsk_mimo_semianalytic(gamma, n_draws == 0 ? 100000 : n_draws,
                                                         rng);
      }
    }
  });
}

wlansim_status wlansim_parse_ebno_range(const char* text, double* out, size_t capacity,
                                        size_t* n_out) {
  return guarded([&] {
    if (text == nullptr || n_out == nullptr) {
      throw std::invalid_argument("text and n_out must not be null");
    }
    const auto points = wlansim::parse_point_range(text);
    *n_out = points.size();
    if (out != nullptr) {
      if (capacity < points.size()) {
        throw wlansim::ConfigError("point list needs capacity " + std::to_string(points.size()));
      }
      std::copy(points.begin(), points.end(), out);
    }
  });
}

wlansim_status wlansim_config_parse(const char* text, wlansim_config** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) {
      throw std::invalid_argument("text and out must not be null");
    }
    *out = new wlansim_config{wlansim::parse_config(text)};
  });
}

wlansim_status wlansim_config_load(const char* path, wlansim_config** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) {
      throw std::invalid_argument("path and out must not be null");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wlansim::IoError(std::string("cannot read config file '") + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    *out = new wlansim_config{wlansim::parse_config(text.str())};
  });
}

wlansim_status wlansim_config_preset(const char* name, wlansim_config** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) {
      throw std::invalid_argument("name and out must not be null");
    }
    *out = new wlansim_config{wlansim::preset_config(name)};
  });
}

wlansim_status wlansim_config_set(wlansim_config* config, const char* key, const char* value) {
  return guarded([&] {
    if (config == nullptr || key == nullptr || value == nullptr) {
      throw std::invalid_argument("config, key and value must not be null");
    }
    wlansim::apply_override(config->spec, key, value);
  });
}

void wlansim_config_free(wlansim_config* config) { delete config; }

wlansim_status wlansim_sweep_run(const wlansim_config* config, int n_threads,
                                 wlansim_results** out) {
  return guarded([&] {
    if (config == nullptr || out == nullptr) {
      throw std::invalid_argument("config and out must not be null");
    }
    const auto& spec = config->spec;
    std::vector<wlansim::MetricRecord> records;
    if (spec.run_both_scenarios) {
      records = wlansim::compare_scenarios(spec.g, spec.n, spec.eb_n0_points, n_threads);
    } else {
      records = wlansim::sweep(spec.g, spec.eb_n0_points, n_threads);
      const auto n_records = wlansim::sweep(spec.n, spec.eb_n0_points, n_threads);
      records.insert(records.end(), n_records.begin(), n_records.end());
    }
    auto* handle = new wlansim_results;
    handle->records = std::move(records);
    handle->csv = wlansim::records_to_csv(handle->records);
    *out = handle;
  });
}

size_t wlansim_results_count(const wlansim_results* results) {
  return results == nullptr ? 0 : results->records.size();
}

wlansim_status wlansim_results_get(const wlansim_results* results, size_t index,
                                   wlansim_metric_record* out) {
  return guarded([&] {
    if (results == nullptr || out == nullptr) {
      throw std::invalid_argument("results and out must not be null");
    }
    if (index >= results->records.size()) {
      throw std::invalid_argument("record index " + std::to_string(index) + " out of range");
    }
    const auto& r = results->records[index];
    wlansim_metric_record rec{};
    rec.standard = standard_name(r.standard)[0];
    std::snprintf(rec.scenario, sizeof(rec.scenario), "%s", scenario_name(r.scenario));
    rec.ebno_db = r.eb_n0_db;
    rec.bits = r.bits_simulated;
    rec.bit_errors = r.bit_errors;
    rec.packets = r.packets;
    rec.packet_errors = r.packet_errors;
    rec.ber = r.ber;
    rec.per = r.per;
    rec.throughput_bps = r.throughput_bps;
    rec.seed = r.seed;
    *out = rec;
  });
}

const char* wlansim_results_csv(const wlansim_results* results) {
  return results == nullptr ? "" : results->csv.c_str();
}

wlansim_status wlansim_results_write_csv(const wlansim_results* results, const char* path,
                                         int force) {
  return guarded([&] {
    if (results == nullptr || path == nullptr) {
      throw std::invalid_argument("results and path must not be null");
    }
    wlansim::write_file_checked(path, results->csv, force != 0);
  });
}

void wlansim_results_free(wlansim_results* results) { delete results; }

wlansim_status wlansim_write_file(const char* path, const char* content, int force) {
  return guarded([&] {
    if (path == nullptr || content == nullptr) {
      throw std::invalid_argument("path and content must not be null");
    }
    wlansim::write_file_checked(path, content, force != 0);
  });
}

wlansim_status wlansim_spectrum_plan(const wlansim_wlan_deployment* deployments, size_t n,
                                     wlansim_spectrum_report** out) {
  return guarded([&] {
    if (out == nullptr || (n > 0 && deployments == nullptr)) {
      throw std::invalid_argument("deployments and out must not be null");
    }
    std::vector<wlansim::WlanDeployment> deps;
    deps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      const auto& d = deployments[i];
      wlansim::WlanDeployment dep;
      dep.channel = d.channel;
      if (d.width_mhz == 22 || d.width_mhz == 20) {
        dep.width = wlansim::WlanWidth::Occupied22;
      } else if (d.width_mhz == 40) {
        dep.width = wlansim::WlanWidth::Wide40;
      } else {
        throw std::invalid_argument("deployment width must be 20, 22 or 40 MHz, got " +
                                    std::to_string(d.width_mhz));
      }
      dep.extension =
          d.extend_below ? wlansim::Extension::Below : wlansim::Extension::Above;
      deps.push_back(dep);
    }
    *out = new wlansim_spectrum_report{wlansim::spectrum_report(deps)};
  });
}

const char* wlansim_spectrum_report_text(const wlansim_spectrum_report* report) {
  return report == nullptr ? "" : report->report.text.c_str();
}

const char* wlansim_spectrum_report_csv(const wlansim_spectrum_report* report) {
  return report == nullptr ? "" : report->report.csv.c_str();
}

size_t wlansim_spectrum_free_channel_count(const wlansim_spectrum_report* report) {
  return report == nullptr ? 0 : report->report.free_channels.size();
}

int wlansim_spectrum_free_channel_at(const wlansim_spectrum_report* report, size_t index) {
  if (report == nullptr || index >= report->report.free_channels.size()) return -1;
  return report->report.free_channels[index];
}

void wlansim_spectrum_report_free(wlansim_spectrum_report* report) { delete report; }

}  // extern "C"
