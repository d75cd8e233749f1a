#pragma once

#include "knots/braid.hpp"
#include "knots/params.hpp"

#include <optional>
#include <vector>

namespace knots {

/// Witness for 2N | p + tau*q: p + tau*q = 2*N*mu exactly.
struct DivisibilityCertificate {
  int tau = 0;
  std::int64_t mu = 0;
};

struct WritheBounds {
  std::int64_t bound = 0;
  bool sharp = false;
  bool divisible = false;  // 2N | p+q or 2N | p-q
  std::optional<DivisibilityCertificate> certificate;
};

/// The solution-index sets behind the crossing enumeration, computed by brute
/// force from the actual crossings: A = all m values, A0 = those with neither
/// m-q nor m+q in A, A1 = those with m+q in A.
struct CrossingSupport {
  std::int64_t m0 = 0;  // min of A
  std::int64_t C = 0;   // max(A) - m0 - q
  std::vector<std::int64_t> A;
  std::vector<std::int64_t> A0;
  std::vector<std::int64_t> A1;
  bool a_contiguous = false;        // A is an integer interval
  bool decomposition_ok = false;    // A = A0 u A1 u (A1 + q), disjointly
  bool a0a1_interval_ok = false;    // A0 u A1 = [m0, m0 + q - 1]
};

/// Sum of the crossing signs.
std::int64_t direct_writhe(const KnotParams& params);
std::int64_t direct_writhe(const std::vector<Crossing>& crossings);

/// sum_{s=1}^{N-1} sigma(ps/N) sigma(qs/N), evaluated through residues mod 2N.
std::int64_t inner_sigma_sum(std::int64_t N, std::int64_t p, std::int64_t q);

/// 0 when p/d and q/d have different parities, else d * inner_sigma_sum.
/// Agrees with direct_writhe up to a global sign.
std::int64_t closed_form_writhe(const KnotParams& params);

/// Bound d(N-1) with sharpness certificate, else d(N-3).
/// Sharpness requires both the divisibility 2N | p+-q and equal parities of
/// p/d, q/d; the divisibility alone admits zero-writhe counterexamples.
WritheBounds writhe_bounds(const KnotParams& params);

CrossingSupport crossing_support(const KnotParams& params);

/// All integer solutions S of eta < -S/2 + N(2m+1)/(4q) <= 1 + eta, as a
/// closed range; empty when first > second.
std::pair<std::int64_t, std::int64_t> s_window(const KnotParams& params, std::int64_t m);

/// Pairs (k,l) realized at solution index m, i.e. with k+l in the S-window
/// clipped to the realizable range [1, 2N-3].
std::vector<std::pair<std::int64_t, std::int64_t>> realized_pairs(const KnotParams& params,
                                                                  std::int64_t m);

/// s_0(m) for m in A0, s_1(m) for m in A1: the sum of
/// sigma(p(k-l)/N) sigma(q(k-l)/N) over the pairs realized at m (and at m+q
/// when m is in A1). Throws std::invalid_argument outside A0 u A1.
std::int64_t s_sum(const KnotParams& params, std::int64_t m);

/// sum_{u=1}^{q} sigma(pu/q + psi) (-1)^u. Equals +-d for admissible psi when
/// p/d and q/d are both odd.
std::int64_t phase_sum(const KnotParams& params, const EpsRational& psi);

/// The reduced sum over u = 1..qt with slope pt/qt; +-1 for admissible psi.
std::int64_t phase_sum_reduced(std::int64_t p_t, std::int64_t q_t, const EpsRational& psi);

struct SigmaComparison {
  bool all_equal = false;
  bool all_opposite = false;
};

/// Compares sigma(ps/N) and sigma(qs/N) across s = 1..N-1.
SigmaComparison lemma7_check(std::int64_t N, std::int64_t p, std::int64_t q);

}  // namespace knots
