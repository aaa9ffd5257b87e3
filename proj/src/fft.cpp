#include "fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace wlansim {

namespace {

// w[k] = exp(-2*pi*i*k/n) for k < n/2, cached per transform size.
const std::vector<Cplx>& twiddles_for(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, std::unique_ptr<std::vector<Cplx>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[n];
  if (!entry) {
    entry = std::make_unique<std::vector<Cplx>>(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double phi = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      (*entry)[k] = {std::cos(phi), std::sin(phi)};
    }
  }
  return *entry;
}

}  // namespace

void fft_unitary(std::span<Cplx> data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft length must be a power of two");
  }
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const auto& w = twiddles_for(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        Cplx tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        const Cplx u = data[i + k];
        const Cplx v = data[i + k + len / 2] * tw;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
      }
    }
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : data) x *= scale;
}

}  // namespace wlansim
