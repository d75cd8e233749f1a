#pragma once

#include "knots/eps_rational.hpp"

namespace knots {

/// Exact comparison machinery for values sin(2*pi*x) with x an EpsRational.
///
/// fold_sin maps x to y in [-1/4, 1/4] with sin(2*pi*x) = sin(2*pi*y) using
/// only affine steps, and sin is strictly increasing there, so comparing
/// folded arguments compares the sines exactly. The infinitesimal part rides
/// along as a first-order jet; it is only ever the tiebreaker between
/// distinct fold branches, where the jet is exact.
EpsRational fold_sin(const EpsRational& x);

/// Exact comparison of sin(2*pi*a) vs sin(2*pi*b): -1, 0, +1.
int compare_sin(const EpsRational& a, const EpsRational& b);

}  // namespace knots
