// Test-only reference implementations, kept independent of the library code
// they check: erfc via series / continued fraction, closed-form fading BER
// curves, a least-squares Alamouti decoder and an integer-grid band overlap
// check.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace oracles {

// erfc to ~1e-13 absolute: Taylor series of erf below 2, Lentz continued
// fraction above.
inline double erfc_oracle(double x) {
  if (x < 0.0) return 2.0 - erfc_oracle(-x);
  if (x < 2.0) {
    double term = x;
    double sum = x;
    const double x2 = x * x;
    for (int n = 1; n < 200; ++n) {
      term *= -x2 / n;
      const double add = term / (2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 1.0 - 2.0 / std::sqrt(std::numbers::pi) * sum;
  }
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
  // evaluated with the modified Lentz algorithm.
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double a = n / 2.0;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) / std::sqrt(std::numbers::pi) / f;
}

// Inverse of erfc on (0, 2), by bisection against the oracle.
inline double erfcinv_oracle(double y) {
  if (!(y > 0.0 && y < 2.0)) throw std::invalid_argument("erfcinv domain is (0,2)");
  double lo = -8.0, hi = 8.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (erfc_oracle(mid) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Flat Rayleigh BPSK closed form, gamma = average Eb/N0 (linear).
inline double siso_rayleigh_ber(double gamma) {
  return 0.5 * (1.0 - std::sqrt(gamma / (1.0 + gamma)));
}

// BPSK with L-branch maximal-ratio combining over i.i.d. Rayleigh branches,
// gamma_branch per branch; the 2x2 Alamouti link with equal power split is
// the L = 4 case at gamma/2 per branch.
inline double mrc_rayleigh_ber(double gamma_branch, int branches) {
  const double mu = std::sqrt(gamma_branch / (1.0 + gamma_branch));
  const double a = 0.5 * (1.0 - mu);
  const double b = 0.5 * (1.0 + mu);
  double sum = 0.0;
  double binom = 1.0;  // C(branches-1+k, k)
  double bk = 1.0;
  for (int k = 0; k < branches; ++k) {
    if (k > 0) {
      binom = binom * (branches - 1 + k) / k;
      bk *= b;
    }
    sum += binom * bk;
  }
  return std::pow(a, branches) * sum;
}

// Least-squares decode of one Alamouti 2x2 codeword via normal equations;
// h(tx, rx) indexed like the library's FadingRealization but consumed as
// plain complex values so the oracle stays generic.
struct AlamoutiLsResult {
  std::complex<double> s0, s1;
};

inline AlamoutiLsResult alamouti_least_squares(
    const std::array<std::array<std::complex<double>, 2>, 2>& rx,
    const std::array<std::array<std::complex<double>, 2>, 2>& h /* [tx][rx] */) {
  using C = std::complex<double>;
  // Stack r0j and conj(r1j) into b; rows of A multiply (s0, s1).
  std::array<std::array<C, 2>, 4> a{};
  std::array<C, 4> b{};
  for (int j = 0; j < 2; ++j) {
    a[static_cast<std::size_t>(j)] = {h[0][static_cast<std::size_t>(j)],
                                      h[1][static_cast<std::size_t>(j)]};
    b[static_cast<std::size_t>(j)] = rx[0][static_cast<std::size_t>(j)];
    a[static_cast<std::size_t>(2 + j)] = {std::conj(h[1][static_cast<std::size_t>(j)]),
                                          -std::conj(h[0][static_cast<std::size_t>(j)])};
    b[static_cast<std::size_t>(2 + j)] = std::conj(rx[1][static_cast<std::size_t>(j)]);
  }
  C m00{}, m01{}, m10{}, m11{}, r0{}, r1{};
  for (int k = 0; k < 4; ++k) {
    const auto& row = a[static_cast<std::size_t>(k)];
    m00 += std::conj(row[0]) * row[0];
    m01 += std::conj(row[0]) * row[1];
    m10 += std::conj(row[1]) * row[0];
    m11 += std::conj(row[1]) * row[1];
    r0 += std::conj(row[0]) * b[static_cast<std::size_t>(k)];
    r1 += std::conj(row[1]) * b[static_cast<std::size_t>(k)];
  }
  const C det = m00 * m11 - m01 * m10;
  return {(r0 * m11 - m01 * r1) / det, (m00 * r1 - m10 * r0) / det};
}

// Open-interval overlap on the quarter-MHz integer grid. Valid whenever both
// band edges are multiples of 0.5 MHz, which holds for every 802.11 and
// 802.15.4 band in this planner.
inline bool bands_overlap_grid(double lo_a, double hi_a, double lo_b, double hi_b) {
  const auto q = [](double mhz) { return static_cast<long long>(std::llround(mhz * 4.0)); };
  const long long lo = std::max(q(lo_a), q(lo_b));
  const long long hi = std::min(q(hi_a), q(hi_b));
  // A grid point strictly inside both intervals exists iff the open
  // intersection is nonempty (edges are even in quarter-MHz units).
  return hi - lo >= 2;
}

inline double binomial_sigma(double p, double n) {
  return std::sqrt(std::max(p * (1.0 - p), 1e-300) / n);
}

}  // namespace oracles
