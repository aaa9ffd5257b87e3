#include "csv_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace wlansim {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string fmt_u64(uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
  return buf;
}

}  // namespace

std::string records_to_csv(std::span<const MetricRecord> records) {
  std::string out =
      "standard,scenario,ebno_db,bits,bit_errors,packets,packet_errors,ber,per,"
      "throughput_bps,seed\n";
  for (const auto& r : records) {
    out += standard_name(r.standard);
    out += ',';
    out += scenario_name(r.scenario);
    out += ',';
    out += fmt("%.10g", r.eb_n0_db);
    out += ',';
    out += fmt_u64(r.bits_simulated);
    out += ',';
    out += fmt_u64(r.bit_errors);
    out += ',';
    out += fmt_u64(r.packets);
    out += ',';
    out += fmt_u64(r.packet_errors);
    out += ',';
    out += fmt("%.9g", r.ber);
    out += ',';
    out += fmt("%.9g", r.per);
    out += ',';
    out += fmt("%.10g", r.throughput_bps);
    out += ',';
    out += fmt_u64(r.seed);
    out += '\n';
  }
  return out;
}

void write_file_checked(const std::string& path, const std::string& content, bool force) {
  std::error_code ec;
  if (!force && std::filesystem::exists(path, ec)) {
    throw IoError("refusing to overwrite existing file '" + path + "' (use force)");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

SpectrumReport spectrum_report(std::span<const WlanDeployment> deployments) {
  SpectrumReport report;

  std::vector<Band> bands;
  bands.reserve(deployments.size());
  for (const auto& d : deployments) bands.push_back(wlan_band(d));

  std::string text = "wlan deployments:\n";
  if (deployments.empty()) text += "  (none)\n";
  for (std::size_t i = 0; i < deployments.size(); ++i) {
    const auto& d = deployments[i];
    const auto& b = bands[i];
    text += "  ch " + std::to_string(d.channel) +
            (d.width == WlanWidth::Occupied22
                 ? " (22 MHz)"
                 : (d.extension == Extension::Above ? " (40 MHz, extension above)"
                                                    : " (40 MHz, extension below)")) +
            ": " + fmt("%.1f", b.lo_mhz()) + " - " + fmt("%.1f", b.hi_mhz()) + " MHz\n";
  }

  std::string csv = "zigbee_channel,center_mhz,low_mhz,high_mhz,free,overlapping_wlan,"
                    "max_overlap_fraction\n";
  text += "ieee 802.15.4 channels:\n";
  for (int ch = kZigbeeFirstChannel; ch <= kZigbeeLastChannel; ++ch) {
    const Band zb = zigbee_band(ch);
    std::string hits;
    double max_fraction = 0.0;
    for (std::size_t i = 0; i < bands.size(); ++i) {
      if (!overlaps(zb, bands[i])) continue;
      const double f = overlap_fraction(zb, bands[i]);
      max_fraction = std::max(max_fraction, f);
      if (!hits.empty()) hits += ';';
      hits += std::to_string(deployments[i].channel);
      hits += deployments[i].width == WlanWidth::Occupied22 ? "@22" : "@40";
      hits += "(" + fmt("%.3g", f) + ")";
    }
    const bool is_free = hits.empty();
    if (is_free) report.free_channels.push_back(ch);

    text += "  ch " + std::to_string(ch) + "  " + fmt("%.1f", zb.lo_mhz()) + " - " +
            fmt("%.1f", zb.hi_mhz()) + " MHz  " +
            (is_free ? "free" : "overlapped by wlan " + hits) + "\n";

    csv += std::to_string(ch) + ',' + fmt("%.1f", zb.center_mhz) + ',' + fmt("%.1f", zb.lo_mhz()) +
           ',' + fmt("%.1f", zb.hi_mhz()) + ',' + (is_free ? "1" : "0") + ',' +
           (is_free ? "" : hits) + ',' + fmt("%.3g", max_fraction) + '\n';
  }

  text += "free channels:";
  if (report.free_channels.empty()) {
    text += " (none)";
  } else {
    for (int ch : report.free_channels) text += " " + std::to_string(ch);
  }
  text += "\n";
  if (report.free_channels.size() != 3) {
    text += "note: 2.4 GHz coexistence guidance conventionally quotes 3 channels clear of "
            "WLAN traffic; this deployment leaves " +
            std::to_string(report.free_channels.size()) + ".\n";
  }

  report.text = std::move(text);
  report.csv = std::move(csv);
  return report;
}

}  // namespace wlansim
