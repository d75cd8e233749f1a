#pragma once

#include "knots/params.hpp"

#include <cstdint>
#include <vector>

namespace knots {

/// Crossing found by the floating-point scan; t is numeric.
struct OracleCrossing {
  std::int64_t k = 0;
  std::int64_t l = 0;
  double t = 0.0;
  int sign = 0;
  std::int64_t over_strand = 0;
};

/// Re-derives the crossing set numerically: samples x_k(t) - x_l(t) on a
/// uniform grid over (0, 1], bisects each sign change to 1e-12, reads the
/// over strand off the cos coordinates and the sign off finite-difference
/// slopes. Shares no code with the exact enumeration beyond the parameters.
/// Throws OracleMismatch when the total count differs from (N-1)q.
std::vector<OracleCrossing> geometric_oracle(const KnotParams& params, std::int64_t samples);

}  // namespace knots
