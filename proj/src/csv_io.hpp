// Deterministic CSV emission and the spectrum-planner report.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sim_engine.hpp"
#include "spectrum_planner.hpp"

namespace wlansim {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Header: standard,scenario,ebno_db,bits,bit_errors,packets,packet_errors,
// ber,per,throughput_bps,seed. Ratios carry 9 significant digits; equal
// inputs always produce identical bytes.
std::string records_to_csv(std::span<const MetricRecord> records);

// Refuses to overwrite an existing file unless force is set; throws IoError
// naming the path on any failure.
void write_file_checked(const std::string& path, const std::string& content, bool force);

struct SpectrumReport {
  std::string text;
  std::string csv;
  std::vector<int> free_channels;
};

// Lists every zigbee channel with its overlapping WLAN bands and overlap
// fractions, plus the free set. When the computed free-channel count differs
// from the conventionally quoted three, the report says so.
SpectrumReport spectrum_report(std::span<const WlanDeployment> deployments);

}  // namespace wlansim
