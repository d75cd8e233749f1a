#include "knots/skein.hpp"

#include "knots/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace knots {

namespace {

LaurentPoly2 unknot_factor() {
  LaurentPoly2 d = LaurentPoly2::monomial(-1, -1, 1);
  d += LaurentPoly2::monomial(1, -1, -1);
  return d;
}

LaurentPoly2 delta_power(int k) {
  LaurentPoly2 r = LaurentPoly2::one();
  LaurentPoly2 d = unknot_factor();
  for (int i = 0; i < k; ++i) r = r * d;
  return r;
}

using Word = std::vector<BraidLetter>;

// ---------------- word-level skein ----------------
//
// For a trace closure every strand runs downward, so the oriented smoothing of
// a crossing deletes the letter and switching flips its sign: the whole skein
// tree stays inside braid words. The recursion terminates because switching is
// only applied at the first non-descending crossing of the closure traversal.

Word free_reduce_cyclic(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    Word out;
    for (const auto& x : w) {
      if (!out.empty() && out.back().generator == x.generator &&
          out.back().exponent == -x.exponent) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(x);
      }
    }
    while (out.size() >= 2 && out.front().generator == out.back().generator &&
           out.front().exponent == -out.back().exponent) {
      out.erase(out.begin());
      out.pop_back();
      changed = true;
    }
    w = std::move(out);
  }
  return w;
}

std::string word_key(const Word& w, int n) {
  std::string key = std::to_string(n) + "|";
  for (const auto& x : w) {
    key += std::to_string(x.generator);
    key += x.exponent > 0 ? '+' : '-';
  }
  return key;
}

Word min_rotation(const Word& w, int n) {
  if (w.empty()) return w;
  Word best = w;
  std::string best_key = word_key(w, n);
  Word cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    std::string k = word_key(cur, n);
    if (k < best_key) {
      best_key = std::move(k);
      best = cur;
    }
  }
  return best;
}

std::vector<int> word_permutation(const Word& w, int n) {
  std::vector<int> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& x : w) std::swap(occupant[x.generator - 1], occupant[x.generator]);
  std::vector<int> perm(n);
  for (int pos = 0; pos < n; ++pos) perm[occupant[pos]] = pos;
  return perm;
}

int cycle_count(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

struct WordSkein {
  std::unordered_map<std::string, LaurentPoly2> memo;

  LaurentPoly2 eval(Word w, int n) {
    w = free_reduce_cyclic(std::move(w));
    w = min_rotation(w, n);
    std::string key = word_key(w, n);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    LaurentPoly2 result = eval_uncached(w, n);
    memo.emplace(std::move(key), result);
    return result;
  }

  LaurentPoly2 eval_uncached(const Word& w, int n) {
    if (w.empty()) return delta_power(n - 1);

    // An unused generator index splits the closure into a distant union, a
    // once-used index into a connected sum.
    std::vector<int> uses(n, 0);
    for (const auto& x : w) ++uses[x.generator];
    for (int g = 1; g <= n - 1; ++g) {
      if (uses[g] > 1) continue;
      Word low, high;
      for (const auto& x : w) {
        if (x.generator < g) low.push_back(x);
        if (x.generator > g) high.push_back({x.generator - g, x.exponent});
      }
      LaurentPoly2 prod = eval(std::move(low), g) * eval(std::move(high), n - g);
      if (uses[g] == 0) prod = prod * unknot_factor();
      return prod;
    }

    std::optional<std::size_t> bad = first_bad_crossing(w, n);
    if (!bad) return delta_power(cycle_count(word_permutation(w, n)) - 1);

    Word switched = w;
    switched[*bad].exponent = -switched[*bad].exponent;
    Word smoothed = w;
    smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(*bad));

    if (w[*bad].exponent == +1) {
      // v^-1 P+ - v P- = z P0  =>  P+ = v^2 P- + v z P0
      LaurentPoly2 a = eval(std::move(switched), n);
      a.mul_monomial(2, 0, 1);
      LaurentPoly2 b = eval(std::move(smoothed), n);
      b.mul_monomial(1, 1, 1);
      return a + b;
    }
    // P- = v^-2 P+ - v^-1 z P0
    LaurentPoly2 a = eval(std::move(switched), n);
    a.mul_monomial(-2, 0, 1);
    LaurentPoly2 b = eval(std::move(smoothed), n);
    b.mul_monomial(-1, 1, -1);
    return a - b;
  }

  // Walks the closure, components in order of their smallest start position,
  // and returns the first letter whose first visit runs under.
  static std::optional<std::size_t> first_bad_crossing(const Word& w, int n) {
    std::vector<bool> visited(w.size(), false);
    std::vector<bool> started(n, false);
    for (int start = 0; start < n; ++start) {
      if (started[start]) continue;
      int pos = start;
      do {
        started[pos] = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
          int g = w[i].generator;
          if (pos == g - 1 || pos == g) {
            bool moving_right = pos == g - 1;
            bool over = moving_right ? w[i].exponent == +1 : w[i].exponent == -1;
            if (!visited[i]) {
              visited[i] = true;
              if (!over) return i;
            }
            pos = moving_right ? g : g - 1;
          }
        }
        // trace closure: the strand resumes at the top of its final position
      } while (pos != start);
    }
    return std::nullopt;
  }
};

// ---------------- generic oriented diagram skein ----------------
//
// Used for plat closures, where strands run in both directions. The diagram
// is a set of circular passage lists (one per component, ordered along the
// orientation); each crossing owns two passages and a sign.

struct Diagram {
  struct Node {
    int crossing = -1;
    bool over = false;
    int next = -1;
    int prev = -1;
    bool alive = false;
  };
  std::vector<Node> nodes;
  std::vector<int> signs;              // 0 marks a removed crossing
  std::vector<std::array<int, 2>> of;  // crossing -> its two passage nodes
  int live_crossings = 0;
  int free_circles = 0;

  int components() const {
    std::vector<bool> seen(nodes.size(), false);
    int c = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!nodes[i].alive || seen[i]) continue;
      ++c;
      for (int j = static_cast<int>(i); !seen[j]; j = nodes[j].next) seen[j] = true;
    }
    return c + free_circles;
  }
};

// Removes an R1 kink: the two passages are list-adjacent; the strand is
// reconnected without leaving a circlet.
void remove_kink(Diagram& d, int u, int w) {
  auto& N = d.nodes;
  if (N[u].next == w && N[w].next == u) {
    d.free_circles += 1;
  } else if (N[u].next == w) {
    int a = N[u].prev, b = N[w].next;
    N[a].next = b;
    N[b].prev = a;
  } else {
    int a = N[w].prev, b = N[u].next;
    N[a].next = b;
    N[b].prev = a;
  }
  N[u].alive = N[w].alive = false;
}

// Oriented smoothing: incoming arcs reconnect to the opposite outgoing arcs.
void smooth_crossing(Diagram& d, int cr) {
  auto& N = d.nodes;
  int u = d.of[cr][0], w = d.of[cr][1];
  if (N[u].next == w && N[w].next == u) {
    d.free_circles += 2;
  } else if (N[u].next == w) {
    int a = N[u].prev, b = N[w].next;
    N[a].next = b;
    N[b].prev = a;
    d.free_circles += 1;
  } else if (N[w].next == u) {
    int a = N[w].prev, b = N[u].next;
    N[a].next = b;
    N[b].prev = a;
    d.free_circles += 1;
  } else {
    int pu = N[u].prev, nu = N[u].next, pw = N[w].prev, nw = N[w].next;
    N[pu].next = nw;
    N[nw].prev = pu;
    N[pw].next = nu;
    N[nu].prev = pw;
  }
  N[u].alive = N[w].alive = false;
  d.signs[cr] = 0;
  --d.live_crossings;
}

void switch_crossing(Diagram& d, int cr) {
  int u = d.of[cr][0], w = d.of[cr][1];
  d.nodes[u].over = !d.nodes[u].over;
  d.nodes[w].over = !d.nodes[w].over;
  d.signs[cr] = -d.signs[cr];
}

void reduce_r1(Diagram& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t cr = 0; cr < d.of.size(); ++cr) {
      if (d.signs[cr] == 0) continue;
      int u = d.of[cr][0], w = d.of[cr][1];
      if (d.nodes[u].next == w || d.nodes[w].next == u) {
        remove_kink(d, u, w);
        d.signs[cr] = 0;
        --d.live_crossings;
        changed = true;
      }
    }
  }
}

int first_bad_crossing(const Diagram& d) {
  std::vector<bool> visited(d.of.size(), false);
  std::vector<bool> seen(d.nodes.size(), false);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!d.nodes[i].alive || seen[i]) continue;
    for (int j = static_cast<int>(i); !seen[j]; j = d.nodes[j].next) {
      seen[j] = true;
      int cr = d.nodes[j].crossing;
      if (!visited[cr]) {
        visited[cr] = true;
        if (!d.nodes[j].over) return cr;
      }
    }
  }
  return -1;
}

LaurentPoly2 diagram_skein(Diagram d) {
  reduce_r1(d);
  if (d.live_crossings == 0) return delta_power(d.components() - 1);

  int bad = first_bad_crossing(d);
  if (bad < 0) return delta_power(d.components() - 1);

  int sign = d.signs[bad];
  Diagram switched = d;
  switch_crossing(switched, bad);
  Diagram smoothed = std::move(d);
  smooth_crossing(smoothed, bad);

  if (sign == +1) {
    LaurentPoly2 a = diagram_skein(std::move(switched));
    a.mul_monomial(2, 0, 1);
    LaurentPoly2 b = diagram_skein(std::move(smoothed));
    b.mul_monomial(1, 1, 1);
    return a + b;
  }
  LaurentPoly2 a = diagram_skein(std::move(switched));
  a.mul_monomial(-2, 0, 1);
  LaurentPoly2 b = diagram_skein(std::move(smoothed));
  b.mul_monomial(-1, 1, -1);
  return a - b;
}

// ---------------- building diagrams from words ----------------
//
// Ports of letter c: 4c + {0: top-left, 1: top-right, 2: bottom-left,
// 3: bottom-right}, "left" being braid position generator-1. Strands run
// diagonally through a crossing box. Arcs pair ports; caps and closure arcs
// are resolved to a pure port pairing first, with crossing-free circles
// counted separately.

constexpr int kTL = 0, kTR = 1, kBL = 2, kBR = 3;

int through(int port) {
  switch (port % 4) {
    case kTL: return port - kTL + kBR;
    case kTR: return port - kTR + kBL;
    case kBL: return port - kBL + kTR;
    default: return port - kBR + kTL;
  }
}

struct Endpoint {
  int port = -1;  // >= 0: crossing port; < 0: mark index -port-1
  static Endpoint of_port(int p) { return {p}; }
  static Endpoint of_mark(int m) { return {-m - 1}; }
  bool is_mark() const { return port < 0; }
  int mark() const { return -port - 1; }
};

struct RawArcs {
  std::vector<std::pair<Endpoint, Endpoint>> arcs;
  int mark_count = 0;

  int new_mark() { return mark_count++; }
  void add(Endpoint a, Endpoint b) { arcs.push_back({a, b}); }
};

// Fuses arcs through marks and returns the port pairing plus the count of
// crossing-free circles. Ports have arc-degree 1 and marks degree 2, so each
// connected chain of arcs carries exactly two ports; mark-only components are
// closed circles without crossings.
std::pair<std::map<int, int>, int> resolve_marks(const RawArcs& raw, int port_count) {
  const int total = port_count + raw.mark_count;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto key = [&](const Endpoint& e) { return e.is_mark() ? port_count + e.mark() : e.port; };

  std::vector<bool> present(total, false);
  for (const auto& [a, b] : raw.arcs) {
    present[key(a)] = present[key(b)] = true;
    parent[find(key(a))] = find(key(b));
  }

  std::map<int, std::vector<int>> ports_by_root;
  for (int p = 0; p < port_count; ++p) ports_by_root[find(p)].push_back(p);

  std::map<int, int> mate;
  for (const auto& [root, ports] : ports_by_root) {
    (void)root;
    if (ports.size() != 2) throw std::logic_error("strand chain without two port ends");
    mate[ports[0]] = ports[1];
    mate[ports[1]] = ports[0];
  }

  // every component has one root; mark-rooted portless components are circles
  int circles = 0;
  for (int m = 0; m < raw.mark_count; ++m) {
    int k = port_count + m;
    if (present[k] && find(k) == k && !ports_by_root.count(k)) ++circles;
  }
  return {std::move(mate), circles};
}

RawArcs raw_arcs_for_word(const Word& w, int n, bool plat) {
  RawArcs raw;
  std::vector<Endpoint> dangling(n);
  std::vector<int> bottom_mark(n, -1);

  if (plat) {
    for (int i = 0; i + 1 < n; i += 2) {
      int m = raw.new_mark();
      dangling[i] = Endpoint::of_mark(m);
      dangling[i + 1] = Endpoint::of_mark(m);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      int m = raw.new_mark();
      dangling[i] = Endpoint::of_mark(m);
      bottom_mark[i] = m;
    }
  }

  for (std::size_t c = 0; c < w.size(); ++c) {
    int i = w[c].generator - 1;
    raw.add(dangling[i], Endpoint::of_port(static_cast<int>(4 * c) + kTL));
    raw.add(dangling[i + 1], Endpoint::of_port(static_cast<int>(4 * c) + kTR));
    dangling[i] = Endpoint::of_port(static_cast<int>(4 * c) + kBL);
    dangling[i + 1] = Endpoint::of_port(static_cast<int>(4 * c) + kBR);
  }

  if (plat) {
    for (int i = 0; i + 1 < n; i += 2) {
      int m = raw.new_mark();
      raw.add(dangling[i], Endpoint::of_mark(m));
      raw.add(dangling[i + 1], Endpoint::of_mark(m));
    }
  } else {
    for (int i = 0; i < n; ++i) raw.add(dangling[i], Endpoint::of_mark(bottom_mark[i]));
  }
  return raw;
}

Diagram diagram_from_word(const Word& w, int n, bool plat) {
  auto [mate, circles] =
      resolve_marks(raw_arcs_for_word(w, n, plat), static_cast<int>(4 * w.size()));

  Diagram d;
  d.signs.assign(w.size(), 0);
  d.of.assign(w.size(), {-1, -1});
  d.live_crossings = static_cast<int>(w.size());
  d.free_circles = circles;

  std::vector<int> dir_of_node;
  std::vector<bool> port_used(4 * w.size(), false);

  for (int start = 0; start < static_cast<int>(4 * w.size()); ++start) {
    if (port_used[start]) continue;
    int entry = start;
    int first_node = -1, prev_node = -1;
    do {
      port_used[entry] = true;
      int c = entry / 4, p = entry % 4;
      bool downward = p == kTL || p == kTR;
      bool left_right_lane = p == kTL || p == kBR;
      bool over = left_right_lane ? w[c].exponent == +1 : w[c].exponent == -1;

      Diagram::Node node;
      node.crossing = c;
      node.over = over;
      node.alive = true;
      d.nodes.push_back(node);
      dir_of_node.push_back(downward ? +1 : -1);
      int id = static_cast<int>(d.nodes.size() - 1);
      if (d.of[c][0] < 0)
        d.of[c][0] = id;
      else
        d.of[c][1] = id;
      if (prev_node >= 0) {
        d.nodes[prev_node].next = id;
        d.nodes[id].prev = prev_node;
      } else {
        first_node = id;
      }
      prev_node = id;

      int exit = through(entry);
      port_used[exit] = true;
      entry = mate.at(exit);
    } while (entry != start);
    d.nodes[prev_node].next = first_node;
    d.nodes[first_node].prev = prev_node;
  }

  for (std::size_t c = 0; c < w.size(); ++c)
    d.signs[c] = w[c].exponent * dir_of_node[d.of[c][0]] * dir_of_node[d.of[c][1]];
  return d;
}

}  // namespace

LaurentPoly2 skein_oracle(const BraidWord& word, std::size_t crossing_cap) {
  if (word.letters.size() > crossing_cap)
    throw CrossingCapExceeded("word has " + std::to_string(word.letters.size()) +
                              " crossings, cap is " + std::to_string(crossing_cap));
  WordSkein engine;
  return engine.eval(word.letters, static_cast<int>(word.strand_count));
}

LaurentPoly2 plat_closure_poly(const BraidWord& word, std::size_t crossing_cap) {
  if (word.letters.size() > crossing_cap)
    throw CrossingCapExceeded("plat word has " + std::to_string(word.letters.size()) +
                              " crossings, cap is " + std::to_string(crossing_cap));
  if (word.strand_count % 2 != 0) throw LinkNotKnot("plat closure needs an even strand count");
  return diagram_skein(
      diagram_from_word(word.letters, static_cast<int>(word.strand_count), true));
}

LaurentPoly2 diagram_closure_poly(const BraidWord& word) {
  return diagram_skein(
      diagram_from_word(word.letters, static_cast<int>(word.strand_count), false));
}

LaurentPoly2 rational_knot_poly(const std::vector<int>& a) {
  BraidWord w;
  w.strand_count = 4;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int gen = i % 2 == 0 ? 2 : 1;
    int exp = i % 2 == 0 ? +1 : -1;
    for (int rep = 0; rep < a[i]; ++rep) w.letters.push_back({gen, exp});
  }
  Diagram d = diagram_from_word(w.letters, 4, true);
  if (d.components() != 1) throw LinkNotKnot("plat closure of the fraction is a link");
  return diagram_skein(std::move(d));
}

}  // namespace knots
