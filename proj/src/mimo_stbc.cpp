#include "mimo_stbc.hpp"

#include <stdexcept>

namespace wlansim {

StbcCodeword stbc_encode(Cplx s0, Cplx s1) {
  StbcCodeword cw;
  cw.tx[0] = {s0, s1};
  cw.tx[1] = {-std::conj(s1), std::conj(s0)};
  return cw;
}

CombinerOutput stbc_combine(const std::array<std::array<Cplx, 2>, 2>& rx,
                            const FadingRealization& h) {
  if (h.n_tx != 2 || h.n_rx != 2) {
    throw std::invalid_argument("stbc_combine: fading realization must be 2x2");
  }
  CombinerOutput out;
  out.channel_gain = h.gain_sum();
  for (int j = 0; j < 2; ++j) {
    const Cplx h0 = h.at(0, j);
    const Cplx h1 = h.at(1, j);
    const Cplx r0 = rx[0][static_cast<std::size_t>(j)];
    const Cplx r1c = std::conj(rx[1][static_cast<std::size_t>(j)]);
    out.estimates[0] += std::conj(h0) * r0 + h1 * r1c;
    out.estimates[1] += std::conj(h1) * r0 - h0 * r1c;
  }
  return out;
}

double post_combining_ebn0(const FadingRealization& h, double eb_n0_linear) {
  if (!(eb_n0_linear > 0.0)) {
    throw std::invalid_argument("post_combining_ebn0: eb_n0_linear must be > 0");
  }
  return h.gain_sum() * eb_n0_linear;
}

}  // namespace wlansim
