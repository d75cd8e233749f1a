#pragma once

#include "knots/eps_rational.hpp"

#include <cstdint>

namespace knots {

/// The defining triple of K(N,p,q) plus derived data.
///
/// N is the strand count (winding of the first coordinate), q the sin
/// frequency and p the cos frequency of the strand curves
///   B_k(t) = (sin(2*pi*q(t+k)/N), cos(2*pi*p(t+k)/N)),  k = 0..N-1.
/// Validity: 2 <= N < p, N < q, gcd(N,p) = gcd(N,q) = 1.
struct KnotParams {
  std::int64_t N = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t d = 0;    // gcd(p, q)
  std::int64_t p_t = 0;  // p / d
  std::int64_t q_t = 0;  // q / d
  EpsRational eps = EpsRational::delta();  // phase in the cos component
  EpsRational eta = EpsRational::delta();  // endpoint shift of the t-window

  /// Validates and fills in derived fields; throws ValidationError naming the
  /// violated constraint.
  static KnotParams make(std::int64_t N, std::int64_t p, std::int64_t q);
  static KnotParams make(std::int64_t N, std::int64_t p, std::int64_t q,
                         EpsRational eps, EpsRational eta);

  bool both_tilde_odd() const { return p_t % 2 != 0 && q_t % 2 != 0; }
};

}  // namespace knots
