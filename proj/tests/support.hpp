#pragma once

#include <celestial/celestial.hpp>

#include "oracles.hpp"

namespace testing_support {

inline celestial::SL2CElement to_sl2c(const oracle::M2& m) {
  return celestial::SL2CElement(m[0][0], m[0][1], m[1][0], m[1][1]);
}

inline oracle::M2 to_m2(const celestial::SL2CElement& s) { return {{{s.a(), s.b()}, {s.c(), s.d()}}}; }

/// Distance between S and the nearer of {T, -T}.
inline double up_to_sign(const celestial::SL2CElement& s, const celestial::SL2CElement& t) {
  return std::fmin(celestial::max_abs_diff(s.matrix(), t.matrix()),
                   celestial::max_abs_diff(s.matrix(), (-t).matrix()));
}

}  // namespace testing_support
