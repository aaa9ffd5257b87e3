// Alamouti 2x2 space-time block code: encoder and maximum-ratio combiner,
// applied per subcarrier over two OFDM symbol periods.
#pragma once

#include <array>

#include "channel_model.hpp"
#include "fft.hpp"

namespace wlansim {

// tx[time][antenna]: row 0 carries (s0, s1), row 1 carries (-s1*, s0*).
struct StbcCodeword {
  std::array<std::array<Cplx, 2>, 2> tx;
};

StbcCodeword stbc_encode(Cplx s0, Cplx s1);

struct CombinerOutput {
  std::array<Cplx, 2> estimates{};
  double channel_gain = 0.0;  // sum of |coeff|^2 over the four paths
};

// rx[time][rx_antenna] for one codeword; h must be a 2x2 realization.
// With zero noise the estimates equal channel_gain * (s0, s1), so dividing
// by channel_gain recovers the symbols exactly when the gain is positive.
// A zero gain leaves both estimates at zero; the hard demapper's tie rule
// then decides the bits.
CombinerOutput stbc_combine(const std::array<std::array<Cplx, 2>, 2>& rx,
                            const FadingRealization& h);

// Effective post-combining SNR: (sum |coeff|^2) * eb_n0_linear.
double post_combining_ebn0(const FadingRealization& h, double eb_n0_linear);

}  // namespace wlansim
