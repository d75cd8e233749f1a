#include "knots/writhe.hpp"

#include "knots/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace knots {

namespace {

BigInt ceil_eps(const EpsRational& x) { return -floor_eps(-x); }

int sigma_mod(std::int64_t a, std::int64_t N) {
  // sigma(a/N) for N not dividing a, via the residue of a mod 2N
  std::int64_t r = a % (2 * N);
  if (r < 0) r += 2 * N;
  return r < N ? +1 : -1;
}

}  // namespace

std::int64_t direct_writhe(const std::vector<Crossing>& crossings) {
  std::int64_t w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

std::int64_t direct_writhe(const KnotParams& P) { return direct_writhe(enumerate_crossings(P)); }

std::int64_t inner_sigma_sum(std::int64_t N, std::int64_t p, std::int64_t q) {
  std::int64_t sum = 0;
  for (std::int64_t s = 1; s <= N - 1; ++s) sum += sigma_mod(p * s, N) * sigma_mod(q * s, N);
  return sum;
}

std::int64_t closed_form_writhe(const KnotParams& P) {
  if ((P.p_t + P.q_t) % 2 != 0) return 0;
  return P.d * inner_sigma_sum(P.N, P.p, P.q);
}

WritheBounds writhe_bounds(const KnotParams& P) {
  WritheBounds b;
  for (int tau : {+1, -1}) {
    std::int64_t s = P.p + tau * P.q;
    if (s % (2 * P.N) == 0) {
      b.divisible = true;
      b.certificate = DivisibilityCertificate{tau, s / (2 * P.N)};
      break;
    }
  }
  bool same_parity = (P.p_t + P.q_t) % 2 == 0;
  b.sharp = b.divisible && same_parity;
  b.bound = b.sharp ? P.d * (P.N - 1) : P.d * (P.N - 3);
  return b;
}

std::pair<std::int64_t, std::int64_t> s_window(const KnotParams& P, std::int64_t m) {
  // eta < -S/2 + X <= 1 + eta with X = N(2m+1)/(4q)  <=>  2X-2-2eta <= S < 2X-2eta
  EpsRational two_x{Rational(BigInt(P.N) * (2 * m + 1), BigInt(2 * P.q))};
  EpsRational two_eta = Rational(2) * P.eta;
  EpsRational lo = two_x - EpsRational(Rational(2)) - two_eta;
  EpsRational hi = two_x - two_eta;
  BigInt s_min = ceil_eps(lo);
  BigInt s_max = hi.is_integer() ? floor_eps(hi) - 1 : floor_eps(hi);
  return {s_min.convert_to<std::int64_t>(), s_max.convert_to<std::int64_t>()};
}

std::vector<std::pair<std::int64_t, std::int64_t>> realized_pairs(const KnotParams& P,
                                                                  std::int64_t m) {
  auto [s_lo, s_hi] = s_window(P, m);
  s_lo = std::max<std::int64_t>(s_lo, 1);
  s_hi = std::min<std::int64_t>(s_hi, 2 * P.N - 3);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t S = s_lo; S <= s_hi; ++S)
    for (std::int64_t k = std::max<std::int64_t>(0, S - (P.N - 1)); 2 * k < S; ++k)
      out.push_back({k, S - k});
  return out;
}

CrossingSupport crossing_support(const KnotParams& P) {
  CrossingSupport cs;
  std::set<std::int64_t> a_set;
  for (const auto& c : enumerate_crossings(P)) a_set.insert(c.m);
  cs.A.assign(a_set.begin(), a_set.end());
  cs.m0 = cs.A.front();
  std::int64_t a_max = cs.A.back();
  cs.C = a_max - cs.m0 - P.q;
  cs.a_contiguous = a_max - cs.m0 + 1 == static_cast<std::int64_t>(cs.A.size());

  for (std::int64_t m : cs.A) {
    bool up = a_set.count(m + P.q) != 0;
    bool down = a_set.count(m - P.q) != 0;
    if (up) cs.A1.push_back(m);
    if (!up && !down) cs.A0.push_back(m);
  }

  std::set<std::int64_t> rebuilt;
  bool disjoint = true;
  auto insert_all = [&](const std::vector<std::int64_t>& v, std::int64_t shift) {
    for (std::int64_t m : v)
      if (!rebuilt.insert(m + shift).second) disjoint = false;
  };
  insert_all(cs.A0, 0);
  insert_all(cs.A1, 0);
  insert_all(cs.A1, P.q);
  cs.decomposition_ok = disjoint && rebuilt == a_set;

  std::set<std::int64_t> a0a1(cs.A0.begin(), cs.A0.end());
  a0a1.insert(cs.A1.begin(), cs.A1.end());
  cs.a0a1_interval_ok = static_cast<std::int64_t>(a0a1.size()) == P.q &&
                        !a0a1.empty() && *a0a1.begin() == cs.m0 &&
                        *a0a1.rbegin() == cs.m0 + P.q - 1;
  return cs;
}

std::int64_t s_sum(const KnotParams& P, std::int64_t m) {
  CrossingSupport cs = crossing_support(P);
  bool in_a0 = std::binary_search(cs.A0.begin(), cs.A0.end(), m);
  bool in_a1 = std::binary_search(cs.A1.begin(), cs.A1.end(), m);
  if (!in_a0 && !in_a1) throw std::invalid_argument("m outside A0 u A1");
  std::int64_t sum = 0;
  for (auto [k, l] : realized_pairs(P, m)) sum += sigma_mod(P.p * (k - l), P.N) * sigma_mod(P.q * (k - l), P.N);
  if (in_a1)
    for (auto [k, l] : realized_pairs(P, m + P.q))
      sum += sigma_mod(P.p * (k - l), P.N) * sigma_mod(P.q * (k - l), P.N);
  return sum;
}

std::int64_t phase_sum(const KnotParams& P, const EpsRational& psi) {
  std::int64_t sum = 0;
  for (std::int64_t u = 1; u <= P.q; ++u) {
    EpsRational arg = EpsRational(Rational(P.p * u, P.q)) + psi;
    sum += sigma(arg) * (u % 2 == 0 ? +1 : -1);
  }
  return sum;
}

std::int64_t phase_sum_reduced(std::int64_t p_t, std::int64_t q_t, const EpsRational& psi) {
  std::int64_t sum = 0;
  for (std::int64_t u = 1; u <= q_t; ++u) {
    EpsRational arg = EpsRational(Rational(p_t * u, q_t)) + psi;
    sum += sigma(arg) * (u % 2 == 0 ? +1 : -1);
  }
  return sum;
}

SigmaComparison lemma7_check(std::int64_t N, std::int64_t p, std::int64_t q) {
  SigmaComparison r{true, true};
  for (std::int64_t s = 1; s <= N - 1; ++s) {
    int sp = sigma_mod(p * s, N), sq = sigma_mod(q * s, N);
    if (sp != sq) r.all_equal = false;
    if (sp != -sq) r.all_opposite = false;
  }
  return r;
}

}  // namespace knots
