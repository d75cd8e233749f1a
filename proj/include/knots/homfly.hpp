#pragma once

#include "knots/braid.hpp"
#include "knots/laurent.hpp"
#include "knots/params.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace knots {

/// Element of the Hecke algebra H_n in the positive-permutation-braid basis:
/// permutations (one-line, 0-based) with Laurent-polynomial coefficients.
using HeckeElement = std::map<std::vector<int>, LaurentPoly2>;

/// Skein convention used throughout: v^-1 P(L+) - v P(L-) = z P(L0), unknot = 1.
/// A positive generator then satisfies s^2 = vz s + v^2, and the closure is
/// evaluated by peeling one strand at a time (a crossing whose top strand is
/// removed is a first Markov move, a fixed top strand contributes the unknot
/// factor (v^-1 - v)/z).
LaurentPoly2 hecke_closure_poly(const BraidWord& word);

/// Right multiplication of a Hecke element by generator (0-based) to the
/// power +-1. Exposed for tests of the algebra relations.
HeckeElement hecke_right_mul(const HeckeElement& state, int gen, int exp, int strands);

struct HomflyResult {
  LaurentPoly2 polynomial;
  int p_min = 0;  // minimal degree in v
  int p_max = 0;  // maximal degree in v
  std::int64_t writhe = 0;
  std::int64_t strands = 0;
};

/// HOMFLY polynomial of the closure of the word. Throws StrandCapExceeded for
/// more than 7 strands and LinkNotKnot when the closure is not a knot.
HomflyResult homfly_of_braid(const BraidWord& word);

struct FwmCheck {
  std::int64_t lower = 0;  // -(d+1)(N-1)
  std::int64_t upper = 0;  // (d+1)(N-1)
  int p_min = 0;
  int p_max = 0;
  std::int64_t writhe = 0;
  bool pass = false;         // lower <= p_min <= p_max <= upper
  bool morton_pass = false;  // w-N+1 <= p_min <= p_max <= w+N-1
};

/// Degree bounds of the HOMFLY polynomial of the minimal braid closure
/// against both the (d+1)(N-1) box and the writhe-centered band.
FwmCheck fwm_check(const KnotParams& params);

}  // namespace knots
