#include "knots/lemmas.hpp"

#include "knots/braid.hpp"
#include "knots/writhe.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace knots {

namespace {

std::string witness_m(std::int64_t m) { return "m = " + std::to_string(m); }

int parity_sign(std::int64_t m) { return (m % 2 + 2) % 2 == 0 ? +1 : -1; }

}  // namespace

std::vector<LemmaResult> run_lemma_suite(const KnotParams& P, int psi_samples,
                                         std::uint32_t seed) {
  std::vector<LemmaResult> out;
  auto add = [&](std::string name, bool applicable, bool pass, std::string detail) {
    out.push_back({std::move(name), applicable, pass, std::move(detail)});
  };

  const CrossingSupport cs = crossing_support(P);
  const std::set<std::int64_t> a_set(cs.A.begin(), cs.A.end());
  const bool both_odd = P.both_tilde_odd();
  const bool same_parity = (P.p % 2) == (P.q % 2);

  // Lemma 1a: m+q and m-q never both in A.
  {
    bool pass = true;
    std::string w;
    for (std::int64_t m : cs.A)
      if (a_set.count(m + P.q) && a_set.count(m - P.q)) {
        pass = false;
        w = witness_m(m);
        break;
      }
    add("lemma1a", true, pass, w);
  }

  // Lemma 1b: for m in A0, realized k+l lies in {N-2, N-1, N}.
  {
    bool pass = true;
    std::string w;
    for (std::int64_t m : cs.A0) {
      for (auto [k, l] : realized_pairs(P, m)) {
        std::int64_t S = k + l;
        if (S < P.N - 2 || S > P.N) {
          pass = false;
          w = witness_m(m) + ", k+l = " + std::to_string(S);
        }
      }
    }
    add("lemma1b", true, pass, w);
  }

  // Lemma 2i: the integer solutions S of the window inequality are exactly two
  // consecutive values for every m in A.
  {
    bool pass = true;
    std::string w;
    for (std::int64_t m : cs.A) {
      auto [lo, hi] = s_window(P, m);
      if (hi - lo != 1) {
        pass = false;
        w = witness_m(m) + ", window [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        break;
      }
    }
    add("lemma2i", true, pass, w);
  }

  // Lemma 2ii: m in A0 implies S1(m) in {N-2, N-1}.
  {
    bool pass = true;
    std::string w;
    for (std::int64_t m : cs.A0) {
      auto [lo, hi] = s_window(P, m);
      (void)hi;
      if (lo != P.N - 2 && lo != P.N - 1) {
        pass = false;
        w = witness_m(m) + ", S1 = " + std::to_string(lo);
        break;
      }
    }
    add("lemma2ii", true, pass, w);
  }

  // Lemma 2iii: m in A1 implies S1(m+q) = S1(m) + N. The displayed statement
  // has S1(m) - N, but the proof identity shifts solutions upward by N, which
  // is what the data shows; the check verifies the proof's version.
  {
    bool pass = true;
    std::string w = "verified as S1(m+q) = S1(m) + N";
    for (std::int64_t m : cs.A1) {
      auto [lo_m, hi_m] = s_window(P, m);
      auto [lo_mq, hi_mq] = s_window(P, m + P.q);
      (void)hi_m;
      (void)hi_mq;
      if (lo_mq != lo_m + P.N) {
        pass = false;
        w = witness_m(m) + ", S1(m) = " + std::to_string(lo_m) +
            ", S1(m+q) = " + std::to_string(lo_mq);
        break;
      }
    }
    add("lemma2iii", true, pass, w);
  }

  // Lemma 3: s_i(m) equals the inner sigma sum for every m in A0 u A1.
  {
    bool pass = true;
    std::string w;
    if (both_odd) {
      std::int64_t expected = inner_sigma_sum(P.N, P.p, P.q);
      std::vector<std::int64_t> domain = cs.A0;
      domain.insert(domain.end(), cs.A1.begin(), cs.A1.end());
      for (std::int64_t m : domain)
        if (s_sum(P, m) != expected) {
          pass = false;
          w = witness_m(m) + ", s_sum = " + std::to_string(s_sum(P, m)) +
              " != " + std::to_string(expected);
          break;
        }
    }
    add("lemma3", both_odd, pass, w);
  }

  // Lemma 4: A0 u A1 is the integer interval [m0, m0+q-1], and A decomposes
  // disjointly as A0 u A1 u (A1+q).
  {
    bool pass = cs.a_contiguous && cs.a0a1_interval_ok && cs.decomposition_ok;
    std::ostringstream os;
    os << "m0 = " << cs.m0 << ", C = " << cs.C << ", |A| = " << cs.A.size()
       << ", |A1| = " << cs.A1.size();
    if (P.N == 3 && !cs.A1.empty())
      os << " (A1 nonempty at N=3, contrary to the remark after the window lemma)";
    add("lemma4", true, pass, os.str());
  }

  // Lemma 5: the phase sum with slope p/q equals d times the reduced sum.
  // Lemma 6: the reduced sum is +-1. Both for random admissible phases.
  {
    bool pass5 = true, pass6 = true;
    std::string w5, w6;
    if (both_odd) {
      std::mt19937 rng(seed);
      std::uniform_int_distribution<std::int64_t> num(-400, 400);
      std::uniform_int_distribution<std::int64_t> den(1, 40);
      std::uniform_int_distribution<int> inf(0, 1);
      for (int i = 0; i < psi_samples; ++i) {
        EpsRational psi(Rational(num(rng), den(rng)), Rational(inf(rng) == 0 ? 1 : -1));
        std::int64_t full = phase_sum(P, psi);
        std::int64_t reduced = phase_sum_reduced(P.p_t, P.q_t, psi);
        if (full != P.d * reduced) {
          pass5 = false;
          w5 = "psi = " + psi.str();
        }
        if (reduced != 1 && reduced != -1) {
          pass6 = false;
          w6 = "psi = " + psi.str() + ", reduced sum = " + std::to_string(reduced);
        }
      }
    }
    add("lemma5", both_odd, pass5, w5);
    add("lemma6", both_odd, pass6, w6);
  }

  // Lemma 7 (both directions): all-equal <=> 2N | p-q, all-opposite <=> 2N | p+q.
  {
    bool pass = true;
    std::string w;
    if (same_parity) {
      SigmaComparison sc = lemma7_check(P.N, P.p, P.q);
      bool div_minus = (P.p - P.q) % (2 * P.N) == 0;
      bool div_plus = (P.p + P.q) % (2 * P.N) == 0;
      pass = (sc.all_equal == div_minus) && (sc.all_opposite == div_plus);
      std::ostringstream os;
      os << "all_equal = " << sc.all_equal << ", all_opposite = " << sc.all_opposite;
      w = os.str();
    }
    add("lemma7", same_parity, pass, w);
  }

  // Lemma 8: under all-equal, the Euclidean remainders R1 = p mod N and
  // R2 = q mod N satisfy [R1 s / N] = [R2 s / N] for s = 1..N-1, hence R1 = R2.
  {
    SigmaComparison sc = lemma7_check(P.N, P.p, P.q);
    bool applicable = same_parity && sc.all_equal;
    bool pass = true;
    std::string w;
    if (applicable) {
      std::int64_t R1 = P.p % P.N, R2 = P.q % P.N;
      if (R1 != R2) {
        pass = false;
        w = "R1 = " + std::to_string(R1) + ", R2 = " + std::to_string(R2);
      }
      for (std::int64_t s = 1; pass && s <= P.N - 1; ++s)
        if ((R1 * s) / P.N != (R2 * s) / P.N) {
          pass = false;
          w = "s = " + std::to_string(s);
        }
    }
    add("lemma8", applicable, pass, w);
  }

  // Grouped-sum identity: with the effective phase of the sign formula,
  // w equals (-1)^(m0-1) * phase_sum(p(m0-1)/q + eps_eff) * inner sum.
  {
    bool pass = true;
    std::string w;
    if (both_odd) {
      EpsRational eps_eff = EpsRational(Rational(P.p, 2 * P.q)) + Rational(2 * P.p, P.N) * P.eps;
      EpsRational psi_star = EpsRational(Rational(P.p * (cs.m0 - 1), P.q)) + eps_eff;
      std::int64_t predicted =
          parity_sign(cs.m0 - 1) * phase_sum(P, psi_star) * inner_sigma_sum(P.N, P.p, P.q);
      std::int64_t actual = direct_writhe(P);
      pass = predicted == actual;
      w = "predicted " + std::to_string(predicted) + ", direct " + std::to_string(actual);
    }
    add("grouped_sum_identity", both_odd, pass, w);
  }

  return out;
}

bool all_pass(const std::vector<LemmaResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const LemmaResult& r) { return !r.applicable || r.pass; });
}

}  // namespace knots
