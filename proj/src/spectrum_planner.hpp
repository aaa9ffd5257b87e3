// 2.4 GHz channel maps for 802.11 (22/40 MHz) and 802.15.4, spectral
// overlap computation and free-channel search.
#pragma once

#include <span>
#include <vector>

namespace wlansim {

struct Band {
  double center_mhz = 0.0;
  double width_mhz = 0.0;

  double lo_mhz() const { return center_mhz - width_mhz / 2.0; }
  double hi_mhz() const { return center_mhz + width_mhz / 2.0; }
};

enum class WlanWidth { Occupied22, Wide40 };
enum class Extension { Above, Below };

struct WlanDeployment {
  int channel = 1;  // 1..14
  WlanWidth width = WlanWidth::Occupied22;
  Extension extension = Extension::Above;  // 40 MHz only
};

inline constexpr int kZigbeeFirstChannel = 11;
inline constexpr int kZigbeeLastChannel = 26;
inline constexpr double kZigbeeWidthMhz = 3.0;
inline constexpr double kIsmLowMhz = 2400.0;
inline constexpr double kIsmHighMhz = 2483.5;

// 22 MHz class: center 2407 + 5*ch (channel 14 sits at 2484).
// 40 MHz: width 40, center shifted +-10 MHz toward the extension; throws
// std::invalid_argument when the band leaves 2400..2483.5 MHz.
Band wlan_band(const WlanDeployment& d);

// Channels 11..26, centers 2405 + 5*(ch - 11), 3 MHz wide.
Band zigbee_band(int channel);

// Open-interval intersection: a shared boundary point is not an overlap.
bool overlaps(const Band& a, const Band& b);

// Intersection width divided by the 3 MHz zigbee width, clamped to [0,1].
double overlap_fraction(const Band& zigbee, const Band& wlan);

// Zigbee channels whose band overlaps none of the deployment bands.
std::vector<int> free_zigbee_channels(std::span<const WlanDeployment> deployments);

}  // namespace wlansim
