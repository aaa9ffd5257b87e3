#include "spectrum_planner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wlansim {

namespace {

double primary_center_mhz(int channel) {
  if (channel < 1 || channel > 14) {
    throw std::invalid_argument("wlan channel must be in 1..14, got " + std::to_string(channel));
  }
  return channel == 14 ? 2484.0 : 2407.0 + 5.0 * channel;
}

}  // namespace

Band wlan_band(const WlanDeployment& d) {
  const double primary = primary_center_mhz(d.channel);
  if (d.width == WlanWidth::Occupied22) {
    return {primary, 22.0};
  }
  const double shift = d.extension == Extension::Above ? 10.0 : -10.0;
  const Band band{primary + shift, 40.0};
  if (band.lo_mhz() < kIsmLowMhz || band.hi_mhz() > kIsmHighMhz) {
    throw std::invalid_argument("40 MHz deployment on channel " + std::to_string(d.channel) +
                                " does not fit inside 2400..2483.5 MHz");
  }
  return band;
}

Band zigbee_band(int channel) {
  if (channel < kZigbeeFirstChannel || channel > kZigbeeLastChannel) {
    throw std::invalid_argument("zigbee channel must be in 11..26, got " +
                                std::to_string(channel));
  }
  return {2405.0 + 5.0 * (channel - kZigbeeFirstChannel), kZigbeeWidthMhz};
}

bool overlaps(const Band& a, const Band& b) {
  return std::max(a.lo_mhz(), b.lo_mhz()) < std::min(a.hi_mhz(), b.hi_mhz());
}

double overlap_fraction(const Band& zigbee, const Band& wlan) {
  const double width =
      std::min(zigbee.hi_mhz(), wlan.hi_mhz()) - std::max(zigbee.lo_mhz(), wlan.lo_mhz());
  return std::clamp(width / zigbee.width_mhz, 0.0, 1.0);
}

std::vector<int> free_zigbee_channels(std::span<const WlanDeployment> deployments) {
  std::vector<Band> bands;
  bands.reserve(deployments.size());
  for (const auto& d : deployments) bands.push_back(wlan_band(d));

  std::vector<int> free;
  for (int ch = kZigbeeFirstChannel; ch <= kZigbeeLastChannel; ++ch) {
    const Band zb = zigbee_band(ch);
    const bool hit =
        std::any_of(bands.begin(), bands.end(), [&](const Band& b) { return overlaps(zb, b); });
    if (!hit) free.push_back(ch);
  }
  return free;
}

}  // namespace wlansim
