#pragma once

#include "knots/params.hpp"
#include "knots/rational.hpp"

#include <string>
#include <vector>

namespace knots {

/// One crossing point of the minimal braid: strands k < l meet at parameter t,
/// where t = -(k+l)/2 + N(2m+1)/(4q) for the integer solution index m.
struct Crossing {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  Rational t;
  int sign = 0;
  std::int64_t over_strand = 0;  // k or l: the strand with the larger cos coordinate
};

struct BraidLetter {
  int generator = 0;  // Artin index, 1-based
  int exponent = 0;   // +1 or -1
};

struct BraidWord {
  std::vector<BraidLetter> letters;
  std::int64_t strand_count = 0;

  std::int64_t exponent_sum() const;
  /// Position permutation of the word: perm[x] = final position of the strand
  /// that starts at position x (0-based).
  std::vector<int> permutation() const;
  /// True iff the closure of the word is a single-component knot.
  bool closure_is_knot() const;
  std::string str() const;  // "s1 s2^-1 ..."
};

/// All (N-1)q crossings, sorted by t ascending, ties by (k,l).
/// Throws ValidationError via KnotParams::make rules if params were built by hand.
std::vector<Crossing> enumerate_crossings(const KnotParams& params);

/// Sign of the crossing (m,k,l). Derived from the strand geometry: the strand
/// with larger cos coordinate is the over strand, and the sign is +1 when the
/// over strand has the larger x-slope. Symmetric in k and l.
int crossing_sign(const KnotParams& params, std::int64_t m, std::int64_t k, std::int64_t l);

/// Which of k, l passes over at crossing (m,k,l).
std::int64_t over_strand_of(const KnotParams& params, std::int64_t m, std::int64_t k,
                            std::int64_t l);

/// Strand labels ordered by x-coordinate (ascending) at parameter t, exact.
/// Throws DegenerateConfiguration if two strands tie.
std::vector<std::int64_t> strand_order_at(const KnotParams& params, const EpsRational& t);

/// Sweep the crossings in time order and emit the Artin word. The letter for a
/// crossing is sigma_i^(sign) where i is the lower of the two x-positions.
BraidWord braid_word(const KnotParams& params);
BraidWord braid_word(const KnotParams& params, const std::vector<Crossing>& crossings);

/// The standard positive torus braid (s1 s2 ... s_{N-1})^q.
BraidWord torus_braid_word(std::int64_t N, std::int64_t q);

}  // namespace knots
