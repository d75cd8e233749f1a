#include "knots/oracle.hpp"

#include "knots/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace knots {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double strand_x(const KnotParams& P, std::int64_t k, double t) {
  return std::sin(kTwoPi * static_cast<double>(P.q) * (t + static_cast<double>(k)) /
                  static_cast<double>(P.N));
}

double strand_y(const KnotParams& P, std::int64_t k, double t) {
  return std::cos(kTwoPi * static_cast<double>(P.p) * (t + static_cast<double>(k)) /
                  static_cast<double>(P.N));
}

}  // namespace

std::vector<OracleCrossing> geometric_oracle(const KnotParams& P, std::int64_t samples) {
  const std::int64_t expected = (P.N - 1) * P.q;
  if (samples < 64 * expected) samples = 64 * expected;

  std::vector<OracleCrossing> out;
  const double h = 1.0 / static_cast<double>(samples);
  for (std::int64_t k = 0; k < P.N; ++k) {
    for (std::int64_t l = k + 1; l < P.N; ++l) {
      auto diff = [&](double t) { return strand_x(P, k, t) - strand_x(P, l, t); };
      double prev_t = 1e-9;  // just inside the window, mirroring the eta shift
      double prev_v = diff(prev_t);
      for (std::int64_t i = 1; i <= samples; ++i) {
        double cur_t = static_cast<double>(i) * h;
        double cur_v = diff(cur_t);
        if ((prev_v < 0.0 && cur_v > 0.0) || (prev_v > 0.0 && cur_v < 0.0) || cur_v == 0.0) {
          double a = prev_t, b = cur_t, fa = prev_v;
          for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
            double mid = 0.5 * (a + b);
            double fm = diff(mid);
            if (fm == 0.0) { a = b = mid; break; }
            if ((fa < 0.0) == (fm < 0.0)) { a = mid; fa = fm; } else { b = mid; }
          }
          double root = 0.5 * (a + b);
          OracleCrossing c;
          c.k = k;
          c.l = l;
          c.t = root;
          c.over_strand = strand_y(P, k, root) > strand_y(P, l, root) ? k : l;
          const double step = 1e-7;
          double slope_k = (strand_x(P, k, root + step) - strand_x(P, k, root - step));
          double slope_l = (strand_x(P, l, root + step) - strand_x(P, l, root - step));
          double over_minus_under =
              c.over_strand == k ? slope_k - slope_l : slope_l - slope_k;
          c.sign = over_minus_under > 0.0 ? +1 : -1;
          out.push_back(c);
        }
        prev_t = cur_t;
        prev_v = cur_v;
      }
    }
  }

  if (static_cast<std::int64_t>(out.size()) != expected)
    throw OracleMismatch("numeric scan found " + std::to_string(out.size()) +
                         " crossings, expected " + std::to_string(expected));
  std::sort(out.begin(), out.end(), [](const OracleCrossing& a, const OracleCrossing& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  });
  return out;
}

}  // namespace knots
