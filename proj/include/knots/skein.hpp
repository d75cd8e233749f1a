#pragma once

#include "knots/braid.hpp"
#include "knots/laurent.hpp"

#include <cstdint>
#include <vector>

namespace knots {

/// HOMFLY of the braid closure by recursive skein resolution on the word:
/// switching a crossing flips a letter's sign, the oriented smoothing deletes
/// the letter. Recursion drives the diagram toward a descending unlink.
/// Independent of the Hecke route. Throws CrossingCapExceeded above the cap.
LaurentPoly2 skein_oracle(const BraidWord& word, std::size_t crossing_cap = 12);

/// HOMFLY of the plat closure of a word on an even number of strands
/// (positions 2i, 2i+1 capped above and below), via a generic oriented
/// diagram skein. Throws LinkNotKnot when the plat closure is a link.
LaurentPoly2 plat_closure_poly(const BraidWord& word, std::size_t crossing_cap = 16);

/// Same generic diagram engine applied to the trace closure; used to
/// cross-check the plat path against the word-level oracle.
LaurentPoly2 diagram_closure_poly(const BraidWord& word);

/// HOMFLY of the two-bridge knot with Conway continued fraction
/// [a1, a2, ..., ak] (all entries positive, odd k), built as the plat closure
/// of s2^{a1} s1^{-a2} s2^{a3} ... s2^{ak} on four strands.
LaurentPoly2 rational_knot_poly(const std::vector<int>& a);

}  // namespace knots
