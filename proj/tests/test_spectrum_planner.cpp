#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rng.hpp"
#include "spectrum_planner.hpp"

using namespace wlansim;

TEST_CASE("wlan band centers and spans") {
  const Band ch1 = wlan_band({1, WlanWidth::Occupied22});
  CHECK(ch1.center_mhz == doctest::Approx(2412.0));
  CHECK(ch1.lo_mhz() == doctest::Approx(2401.0));
  CHECK(ch1.hi_mhz() == doctest::Approx(2423.0));

  CHECK(wlan_band({6, WlanWidth::Occupied22}).center_mhz == doctest::Approx(2437.0));
  CHECK(wlan_band({11, WlanWidth::Occupied22}).center_mhz == doctest::Approx(2462.0));
  CHECK(wlan_band({14, WlanWidth::Occupied22}).center_mhz == doctest::Approx(2484.0));

  const Band wide = wlan_band({3, WlanWidth::Wide40, Extension::Above});
  CHECK(wide.center_mhz == doctest::Approx(2432.0));
  CHECK(wide.lo_mhz() == doctest::Approx(2412.0));
  CHECK(wide.hi_mhz() == doctest::Approx(2452.0));

  const Band below = wlan_band({13, WlanWidth::Wide40, Extension::Below});
  CHECK(below.center_mhz == doctest::Approx(2462.0));

  CHECK_THROWS_AS(wlan_band({0, WlanWidth::Occupied22}), std::invalid_argument);
  CHECK_THROWS_AS(wlan_band({15, WlanWidth::Occupied22}), std::invalid_argument);
  // 40 MHz bands must stay inside 2400..2483.5.
  CHECK_THROWS_AS(wlan_band({11, WlanWidth::Wide40, Extension::Above}), std::invalid_argument);
  CHECK_THROWS_AS(wlan_band({1, WlanWidth::Wide40, Extension::Below}), std::invalid_argument);
  CHECK_THROWS_AS(wlan_band({14, WlanWidth::Wide40, Extension::Above}), std::invalid_argument);
}

TEST_CASE("zigbee channels sit every 5 MHz from 2405 to 2480") {
  for (int ch = kZigbeeFirstChannel; ch <= kZigbeeLastChannel; ++ch) {
    const Band b = zigbee_band(ch);
    CHECK(b.center_mhz == doctest::Approx(2405.0 + 5.0 * (ch - 11)));
    CHECK(b.width_mhz == doctest::Approx(3.0));
  }
  CHECK(zigbee_band(26).center_mhz == doctest::Approx(2480.0));
  CHECK_THROWS_AS(zigbee_band(10), std::invalid_argument);
  CHECK_THROWS_AS(zigbee_band(27), std::invalid_argument);
}

TEST_CASE("overlap uses open intervals") {
  const Band wlan1{2412.0, 22.0};   // 2401..2423
  const Band zig15{2425.0, 3.0};    // 2423.5..2426.5
  CHECK_FALSE(overlaps(wlan1, zig15));

  const Band wlan6{2437.0, 22.0};  // 2426..2448
  CHECK(overlaps(wlan6, zig15));   // 0.5 MHz of shared spectrum
  CHECK(overlap_fraction(zig15, wlan6) == doctest::Approx(0.5 / 3.0));

  CHECK(overlaps(wlan1, wlan1));

  // A shared edge is not an overlap.
  const Band touching{2423.0 + 1.5, 3.0};  // 2423..2426
  CHECK_FALSE(overlaps(wlan1, touching));
}

TEST_CASE("overlap is symmetric") {
  RandomStream rng(derive_key({61}));
  for (int trial = 0; trial < 200; ++trial) {
    const Band a{2400.0 + 0.5 * static_cast<double>(rng.next_u64() % 160), 3.0 + (rng.next_u64() % 3) * 9.5};
    const Band b{2400.0 + 0.5 * static_cast<double>(rng.next_u64() % 160), 3.0 + (rng.next_u64() % 3) * 9.5};
    CHECK(overlaps(a, b) == overlaps(b, a));
    CHECK(overlaps(a, a));
  }
}

TEST_CASE("free channels for the canonical 1/6/11 deployment") {
  const std::vector<WlanDeployment> deps = {{1, WlanWidth::Occupied22},
                                            {6, WlanWidth::Occupied22},
                                            {11, WlanWidth::Occupied22}};
  CHECK(free_zigbee_channels(deps) == std::vector<int>{25, 26});
}

TEST_CASE("no deployments leaves all 16 channels free") {
  const auto free = free_zigbee_channels({});
  CHECK(free.size() == 16);
  CHECK(free.front() == 11);
  CHECK(free.back() == 26);
}

TEST_CASE("two 40 MHz deployments can cover every zigbee channel") {
  // 2402..2442 and 2442..2482.
  const std::vector<WlanDeployment> deps = {{1, WlanWidth::Wide40, Extension::Above},
                                            {9, WlanWidth::Wide40, Extension::Above}};
  CHECK(wlan_band(deps[0]).lo_mhz() == doctest::Approx(2402.0));
  CHECK(wlan_band(deps[1]).hi_mhz() == doctest::Approx(2482.0));
  CHECK(free_zigbee_channels(deps).empty());
}

namespace {

std::vector<WlanDeployment> random_deployments(RandomStream& rng) {
  std::vector<WlanDeployment> deps;
  const uint64_t count = rng.next_u64() % 5;
  for (uint64_t i = 0; i < count; ++i) {
    WlanDeployment d;
    d.channel = 1 + static_cast<int>(rng.next_u64() % 14);
    if (rng.next_u64() % 3 == 0) {
      d.width = WlanWidth::Wide40;
      d.extension = rng.next_u64() % 2 ? Extension::Above : Extension::Below;
      // Keep only deployments that fit the band.
      try {
        wlan_band(d);
      } catch (const std::invalid_argument&) {
        d.width = WlanWidth::Occupied22;
      }
    }
    deps.push_back(d);
  }
  return deps;
}

}  // namespace

TEST_CASE("free set agrees with the quarter-grid interval oracle") {
  RandomStream rng(derive_key({62}));
  for (int trial = 0; trial < 300; ++trial) {
    const auto deps = random_deployments(rng);
    const auto free = free_zigbee_channels(deps);
    const std::set<int> free_set(free.begin(), free.end());

    for (int ch = kZigbeeFirstChannel; ch <= kZigbeeLastChannel; ++ch) {
      const Band zb = zigbee_band(ch);
      bool oracle_hit = false;
      for (const auto& d : deps) {
        const Band wb = wlan_band(d);
        oracle_hit |= oracles::bands_overlap_grid(zb.lo_mhz(), zb.hi_mhz(), wb.lo_mhz(),
                                                  wb.hi_mhz());
      }
      CHECK(free_set.count(ch) == (oracle_hit ? 0u : 1u));
    }
  }
}

TEST_CASE("free set is antitone in the deployment list") {
  RandomStream rng(derive_key({63}));
  for (int trial = 0; trial < 100; ++trial) {
    auto deps = random_deployments(rng);
    const auto before = free_zigbee_channels(deps);

    WlanDeployment extra;
    extra.channel = 1 + static_cast<int>(rng.next_u64() % 14);
    deps.push_back(extra);
    const auto after = free_zigbee_channels(deps);

    CHECK(after.size() <= before.size());
    CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
  }
}
