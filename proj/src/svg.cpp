#include "knots/svg.hpp"

#include "knots/braid.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace knots {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kWidth = 1200, kHeight = 400;
constexpr double kMarginX = 60.0, kAmplitude = 150.0, kMidY = 200.0;
constexpr int kSamples = 720;
constexpr double kGapHalfWidth = 0.012;

double px(double t) { return kMarginX + t * (kWidth - 2 * kMarginX); }

double strand_value(const KnotParams& P, std::int64_t k, double t) {
  return std::sin(kTwoPi * static_cast<double>(P.q) * (t + static_cast<double>(k)) /
                  static_cast<double>(P.N));
}

double py(double value) { return kMidY - kAmplitude * value; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string render_braid_svg(const KnotParams& P) {
  auto crossings = enumerate_crossings(P);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << " " << kHeight
     << "\">\n";
  os << " <style>polyline{fill:none;stroke:#222;stroke-width:2}"
        ".crossing-pos{fill:#1a7f37}.crossing-neg{fill:#b3261e}"
        "text{font:12px monospace}</style>\n";

  for (std::int64_t k = 0; k < P.N; ++k) {
    // gaps where this strand passes under
    std::vector<std::pair<double, double>> gaps;
    for (const auto& c : crossings) {
      std::int64_t under = c.over_strand == c.k ? c.l : c.k;
      if (under == k) {
        double t = c.t.to_double();
        gaps.push_back({t - kGapHalfWidth, t + kGapHalfWidth});
      }
    }
    auto in_gap = [&](double t) {
      for (auto [a, b] : gaps)
        if (t > a && t < b) return true;
      return false;
    };

    os << " <g class=\"strand-" << k << "\">\n";
    std::ostringstream points;
    bool open = false;
    for (int i = 0; i <= kSamples; ++i) {
      double t = static_cast<double>(i) / kSamples;
      if (in_gap(t)) {
        if (open) {
          os << "  <polyline points=\"" << points.str() << "\"/>\n";
          points.str("");
          open = false;
        }
        continue;
      }
      if (open) points << " ";
      points << num(px(t)) << "," << num(py(strand_value(P, k, t)));
      open = true;
    }
    if (open) os << "  <polyline points=\"" << points.str() << "\"/>\n";
    os << " </g>\n";
  }

  for (const auto& c : crossings) {
    double t = c.t.to_double();
    double y = py(strand_value(P, c.k, t));
    const char* cls = c.sign > 0 ? "crossing-pos" : "crossing-neg";
    os << " <circle class=\"" << cls << "\" cx=\"" << num(px(t)) << "\" cy=\"" << num(y)
       << "\" r=\"4\"/>\n";
    os << " <text x=\"" << num(px(t) + 6.0) << "\" y=\"" << num(y - 6.0) << "\">"
       << (c.sign > 0 ? "+" : "-") << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace knots
