#include "knots/braid.hpp"

#include "knots/circle.hpp"
#include "knots/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace knots {

namespace {

int parity_sign(std::int64_t m) { return (m % 2 + 2) % 2 == 0 ? +1 : -1; }

/// Argument of sigma carrying the phase: p(2m+1)/(2q) + (2p/N) eps.
EpsRational phase_arg(const KnotParams& P, std::int64_t m) {
  Rational base(BigInt(P.p) * (2 * m + 1), BigInt(2 * P.q));
  return EpsRational(base) + Rational(2 * P.p, P.N) * P.eps;
}

int pair_factor(const KnotParams& P, std::int64_t k, std::int64_t l) {
  Rational dp(BigInt(P.p) * (k - l), BigInt(P.N));
  Rational dq(BigInt(P.q) * (k - l), BigInt(P.N));
  return sigma(dp) * sigma(dq);
}

}  // namespace

std::int64_t BraidWord::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& x : letters) s += x.exponent;
  return s;
}

std::vector<int> BraidWord::permutation() const {
  const int n = static_cast<int>(strand_count);
  std::vector<int> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& x : letters) std::swap(occupant[x.generator - 1], occupant[x.generator]);
  std::vector<int> perm(n);
  for (int pos = 0; pos < n; ++pos) perm[occupant[pos]] = pos;
  return perm;
}

bool BraidWord::closure_is_knot() const {
  auto perm = permutation();
  int seen = 1, at = perm[0];
  while (at != 0) {
    at = perm[at];
    ++seen;
  }
  return seen == strand_count;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : letters) {
    if (!first) os << " ";
    os << "s" << x.generator;
    if (x.exponent != 1) os << "^" << x.exponent;
    first = false;
  }
  return os.str();
}

int crossing_sign(const KnotParams& P, std::int64_t m, std::int64_t k, std::int64_t l) {
  return parity_sign(m) * sigma(phase_arg(P, m)) * pair_factor(P, k, l);
}

std::int64_t over_strand_of(const KnotParams& P, std::int64_t m, std::int64_t k,
                            std::int64_t l) {
  // y_k - y_l = -2 sin(pi * phase_arg) sin(pi * p(k-l)/N)
  int sgn_y = -sigma(phase_arg(P, m)) * sigma(Rational(BigInt(P.p) * (k - l), BigInt(P.N)));
  return sgn_y > 0 ? k : l;
}

std::vector<Crossing> enumerate_crossings(const KnotParams& P) {
  std::vector<Crossing> out;
  for (std::int64_t k = 0; k + 1 <= P.N - 1; ++k) {
    for (std::int64_t l = k + 1; l <= P.N - 1; ++l) {
      const Rational half_S(k + l, 2);
      // eta < -(k+l)/2 + N(2m+1)/(4q) <= 1 + eta, solved for the integer m:
      //   m in ( (4q/N)(eta + S/2) - 1 ) / 2 , ( (4q/N)(1 + eta + S/2) - 1 ) / 2 ]
      EpsRational lo = Rational(1, 2) * (Rational(4 * P.q, P.N) * (P.eta + EpsRational(half_S)) -
                                         EpsRational(Rational(1)));
      EpsRational hi = Rational(1, 2) * (Rational(4 * P.q, P.N) *
                                             (P.eta + EpsRational(half_S + Rational(1))) -
                                         EpsRational(Rational(1)));
      BigInt m_first = floor_eps(lo) + 1;
      BigInt m_last = floor_eps(hi);
      for (BigInt mb = m_first; mb <= m_last; ++mb) {
        std::int64_t m = mb.convert_to<std::int64_t>();
        Crossing c;
        c.k = k;
        c.l = l;
        c.m = m;
        c.t = Rational(BigInt(P.N) * (2 * m + 1), BigInt(4 * P.q)) - half_S;
        c.sign = crossing_sign(P, m, k, l);
        c.over_strand = over_strand_of(P, m, k, l);
        out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  });
  return out;
}

std::vector<std::int64_t> strand_order_at(const KnotParams& P, const EpsRational& t) {
  std::vector<std::int64_t> order(P.N);
  std::iota(order.begin(), order.end(), 0);
  std::vector<EpsRational> folded;
  folded.reserve(P.N);
  for (std::int64_t k = 0; k < P.N; ++k)
    folded.push_back(fold_sin(Rational(P.q, P.N) * (t + EpsRational(Rational(k)))));
  std::sort(order.begin(), order.end(),
            [&](std::int64_t a, std::int64_t b) { return folded[a] < folded[b]; });
  for (std::int64_t i = 0; i + 1 < P.N; ++i)
    if (folded[order[i]] == folded[order[i + 1]])
      throw DegenerateConfiguration("strands " + std::to_string(order[i]) + " and " +
                                    std::to_string(order[i + 1]) +
                                    " coincide at the sweep start");
  return order;
}

BraidWord braid_word(const KnotParams& P) { return braid_word(P, enumerate_crossings(P)); }

BraidWord braid_word(const KnotParams& P, const std::vector<Crossing>& crossings) {
  BraidWord word;
  word.strand_count = P.N;
  word.letters.reserve(crossings.size());

  std::vector<std::int64_t> order = strand_order_at(P, P.eta);
  std::vector<std::int64_t> pos(P.N);
  const std::vector<std::int64_t> initial_pos = [&] {
    std::vector<std::int64_t> v(P.N);
    for (std::int64_t i = 0; i < P.N; ++i) v[order[i]] = i;
    return v;
  }();
  pos = initial_pos;

  for (std::size_t i = 0; i < crossings.size();) {
    std::size_t j = i;
    while (j < crossings.size() && crossings[j].t == crossings[i].t) ++j;
    // Simultaneous crossings must act on disjoint position pairs; they commute
    // and are emitted in (k,l) order (the enumeration order within equal t).
    std::vector<std::int64_t> support;
    for (std::size_t c = i; c < j; ++c) {
      std::int64_t a = pos[crossings[c].k], b = pos[crossings[c].l];
      if (a > b) std::swap(a, b);
      if (b - a != 1)
        throw DegenerateConfiguration("crossing strands not adjacent at t = " +
                                      crossings[c].t.str());
      support.push_back(a);
    }
    for (std::size_t x = 0; x < support.size(); ++x)
      for (std::size_t y = x + 1; y < support.size(); ++y)
        if (support[x] == support[y] || support[x] + 1 == support[y] ||
            support[y] + 1 == support[x])
          throw DegenerateConfiguration("overlapping simultaneous crossings at t = " +
                                        crossings[i].t.str());
    for (std::size_t c = i; c < j; ++c) {
      const Crossing& cr = crossings[c];
      std::int64_t a = std::min(pos[cr.k], pos[cr.l]);
      word.letters.push_back({static_cast<int>(a + 1), cr.sign});
      std::swap(order[a], order[a + 1]);
      pos[order[a]] = a;
      pos[order[a + 1]] = a + 1;
    }
    i = j;
  }

  // Closure: strand k ends where strand k+1 started (t -> t+1 shifts labels).
  for (std::int64_t k = 0; k < P.N; ++k)
    if (pos[k] != initial_pos[(k + 1) % P.N])
      throw DegenerateConfiguration("sweep closure permutation is not the expected N-cycle");
  return word;
}

BraidWord torus_braid_word(std::int64_t N, std::int64_t q) {
  BraidWord w;
  w.strand_count = N;
  for (std::int64_t rep = 0; rep < q; ++rep)
    for (int g = 1; g <= N - 1; ++g) w.letters.push_back({g, +1});
  return w;
}

}  // namespace knots
