// Counter-based random streams.
//
// Every consumer (payload bits, fading, noise, interference) derives its own
// stream from (master seed, sweep point, purpose), so simulation output does
// not depend on execution order and sweep points can run in parallel while
// staying bit-reproducible.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace wlansim {

inline constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline uint64_t derive_key(std::initializer_list<uint64_t> parts) {
  uint64_t key = 0x243f6a8885a308d3ULL;
  for (uint64_t p : parts) key = mix64((key ^ p) + kGoldenGamma);
  return key;
}

class RandomStream {
 public:
  explicit RandomStream(uint64_t key) : state_(key) {}

  uint64_t next_u64() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Circularly-symmetric complex Gaussian with the given total variance
  // (variance/2 per real dimension), via Box-Muller.
  std::complex<double> next_cgauss(double variance) {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-std::log(u1) * variance);
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  uint64_t state_;
};

// Stream purposes; part of the derivation key so streams never collide.
enum StreamPurpose : uint64_t {
  kStreamPointSeed = 0xA0,
  kStreamPayload = 0xA1,
  kStreamFading = 0xA2,
  kStreamNoise = 0xA3,
  kStreamInterferenceNoise = 0xA4,
  kStreamInterferenceSchedule = 0xA5,
  kStreamAnalytic = 0xA6,
};

}  // namespace wlansim
