#include "knots/params.hpp"

#include "knots/errors.hpp"

#include <numeric>
#include <string>

namespace knots {

namespace {
constexpr std::int64_t kMaxFrequency = 1'000'000;  // keeps m-indices in int64 range
}

KnotParams KnotParams::make(std::int64_t N, std::int64_t p, std::int64_t q,
                            EpsRational eps, EpsRational eta) {
  if (N < 2) throw ValidationError("N must be at least 2");
  if (p > kMaxFrequency || q > kMaxFrequency)
    throw ValidationError("p and q must be at most 1000000");
  if (N >= p) throw ValidationError("N < p required");
  if (N >= q) throw ValidationError("N < q required");
  if (std::gcd(N, p) != 1) throw ValidationError("gcd(N,p) must be 1");
  if (std::gcd(N, q) != 1) throw ValidationError("gcd(N,q) must be 1");
  KnotParams k;
  k.N = N;
  k.p = p;
  k.q = q;
  k.d = std::gcd(p, q);
  k.p_t = p / k.d;
  k.q_t = q / k.d;
  k.eps = std::move(eps);
  k.eta = std::move(eta);
  return k;
}

KnotParams KnotParams::make(std::int64_t N, std::int64_t p, std::int64_t q) {
  return make(N, p, q, EpsRational::delta(), EpsRational::delta());
}

}  // namespace knots
