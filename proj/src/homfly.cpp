#include "knots/homfly.hpp"

#include "knots/errors.hpp"
#include "knots/writhe.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace knots {

namespace {

LaurentPoly2 unknot_factor() {
  // (v^-1 - v) / z
  LaurentPoly2 d = LaurentPoly2::monomial(-1, -1, 1);
  d += LaurentPoly2::monomial(1, -1, -1);
  return d;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// One-line form of pi * s_i (swap of the values i, i+1).
std::vector<int> apply_swap(const std::vector<int>& pi, int i) {
  std::vector<int> out(pi);
  for (int& x : out) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return out;
}

// l(pi * s_i) > l(pi) iff the value i occurs before the value i+1.
bool length_increases(const std::vector<int>& pi, int i) {
  for (int x : pi) {
    if (x == i) return true;
    if (x == i + 1) return false;
  }
  return false;
}

void accumulate(HeckeElement& into, const std::vector<int>& perm, const LaurentPoly2& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = into.emplace(perm, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

HeckeElement hecke_right_mul(const HeckeElement& state, int gen, int exp, int /*strands*/) {
  HeckeElement out;
  for (const auto& [pi, c] : state) {
    std::vector<int> pis = apply_swap(pi, gen);
    if (exp == +1) {
      if (length_increases(pi, gen)) {
        accumulate(out, pis, c);
      } else {
        // s^2 = vz s + v^2 applied to the reduced part
        LaurentPoly2 keep = c;
        keep.mul_monomial(1, 1, 1);
        accumulate(out, pi, keep);
        LaurentPoly2 drop = c;
        drop.mul_monomial(2, 0, 1);
        accumulate(out, pis, drop);
      }
    } else {
      if (length_increases(pi, gen)) {
        // s^-1 = v^-2 s - v^-1 z
        LaurentPoly2 up = c;
        up.mul_monomial(-2, 0, 1);
        accumulate(out, pis, up);
        LaurentPoly2 stay = c;
        stay.mul_monomial(-1, 1, -1);
        accumulate(out, pi, stay);
      } else {
        accumulate(out, pis, c);
      }
    }
  }
  return out;
}

LaurentPoly2 hecke_closure_poly(const BraidWord& word) {
  const int n = static_cast<int>(word.strand_count);
  HeckeElement state;
  state.emplace(identity_perm(n), LaurentPoly2::one());
  for (const auto& letter : word.letters)
    state = hecke_right_mul(state, letter.generator - 1, letter.exponent, n);

  const LaurentPoly2 delta = unknot_factor();

  // Peel strands: at level m, basis permutations live in S_m.
  for (int m = n; m >= 2; --m) {
    HeckeElement lower;
    for (const auto& [pi, c] : state) {
      int j = pi[m - 1];
      std::vector<int> rho(pi.begin(), pi.end() - 1);
      if (j == m - 1) {
        accumulate(lower, rho, c * delta);
        continue;
      }
      for (int& x : rho)
        if (x > j) --x;
      // T_pi = T_rho * s_{m-2} s_{m-3} ... s_j; the trace strips the top
      // generator and the remaining suffix multiplies back in H_{m-1}.
      HeckeElement tmp;
      tmp.emplace(std::move(rho), c);
      for (int g = m - 3; g >= j; --g) tmp = hecke_right_mul(tmp, g, +1, m - 1);
      for (const auto& [perm2, c2] : tmp) accumulate(lower, perm2, c2);
    }
    state = std::move(lower);
  }

  auto it = state.find(identity_perm(1));
  return it == state.end() ? LaurentPoly2::zero() : it->second;
}

HomflyResult homfly_of_braid(const BraidWord& word) {
  if (word.strand_count > 7)
    throw StrandCapExceeded("braid has " + std::to_string(word.strand_count) +
                            " strands, cap is 7");
  if (!word.closure_is_knot()) throw LinkNotKnot("closure permutation is not a single cycle");
  HomflyResult r;
  r.polynomial = hecke_closure_poly(word);
  r.writhe = word.exponent_sum();
  r.strands = word.strand_count;
  r.p_min = r.polynomial.min_deg_v();
  r.p_max = r.polynomial.max_deg_v();
  return r;
}

FwmCheck fwm_check(const KnotParams& params) {
  BraidWord word = braid_word(params);
  HomflyResult h = homfly_of_braid(word);
  FwmCheck f;
  f.lower = -(params.d + 1) * (params.N - 1);
  f.upper = (params.d + 1) * (params.N - 1);
  f.p_min = h.p_min;
  f.p_max = h.p_max;
  f.writhe = h.writhe;
  f.pass = f.lower <= f.p_min && f.p_min <= f.p_max && f.p_max <= f.upper;
  f.morton_pass = h.writhe - params.N + 1 <= f.p_min && f.p_max <= h.writhe + params.N - 1;
  return f;
}

}  // namespace knots
