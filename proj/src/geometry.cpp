#include "knots/geometry.hpp"

#include "knots/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace knots {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double norm_constraint(const EmbeddingParams& emb, double theta, double r) {
  const auto& K = emb.knot;
  double sq = std::sin(static_cast<double>(K.q) * theta);
  double cp = std::cos(static_cast<double>(K.p) * theta);
  return std::pow(r, 2.0 * static_cast<double>(K.N)) +
         4.0 * emb.a * emb.a * std::pow(r, 2.0 * static_cast<double>(K.q)) * sq * sq +
         4.0 * emb.b * emb.b * std::pow(r, 2.0 * static_cast<double>(K.p)) * cp * cp - 1.0;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

double radius_at(const EmbeddingParams& emb, double theta) {
  double hi_val = norm_constraint(emb, theta, 1.0);
  if (hi_val < 0.0) throw std::runtime_error("no radius root: g(1) < 0");
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    if (norm_constraint(emb, theta, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

RadiusProfile radius_profile(const EmbeddingParams& emb, std::int64_t grid_size) {
  if (grid_size < 256) grid_size = 256;
  RadiusProfile prof;
  prof.thetas.reserve(grid_size);
  prof.radii.reserve(grid_size);
  for (std::int64_t i = 0; i < grid_size; ++i) {
    double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(grid_size);
    prof.thetas.push_back(theta);
    prof.radii.push_back(radius_at(emb, theta));
  }
  return prof;
}

S3Point knot_point(const EmbeddingParams& emb, double theta) {
  const auto& K = emb.knot;
  double r = radius_at(emb, theta);
  double rn = std::pow(r, static_cast<double>(K.N));
  double rq = std::pow(r, static_cast<double>(K.q));
  double rp = std::pow(r, static_cast<double>(K.p));
  return {rn * std::cos(static_cast<double>(K.N) * theta),
          rn * std::sin(static_cast<double>(K.N) * theta),
          2.0 * emb.b * rp * std::cos(static_cast<double>(K.p) * theta),
          2.0 * emb.a * rq * std::sin(static_cast<double>(K.q) * theta)};
}

double radius_periodicity_deviation(const EmbeddingParams& emb, const RadiusProfile& profile) {
  double shift = 2.0 * kPi / static_cast<double>(emb.knot.d);
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.thetas.size(); ++i) {
    double r2 = radius_at(emb, profile.thetas[i] + shift);
    worst = std::max(worst, std::abs(r2 - profile.radii[i]));
  }
  return worst;
}

S3Point apply_psi(const EmbeddingParams& emb, const S3Point& x) {
  double ang = 2.0 * kPi * static_cast<double>(emb.knot.N) / static_cast<double>(emb.knot.d);
  double c = std::cos(ang), s = std::sin(ang);
  return {x[0] * c - x[1] * s, x[0] * s + x[1] * c, x[2], x[3]};
}

double psi_invariance_deviation(const EmbeddingParams& emb, const RadiusProfile& profile) {
  if (emb.knot.d <= 1) throw NotPeriodicParams("gcd(p,q) = 1: no rotational symmetry to test");
  double shift = 2.0 * kPi / static_cast<double>(emb.knot.d);
  double worst = 0.0;
  for (double theta : profile.thetas) {
    S3Point mapped = apply_psi(emb, knot_point(emb, theta));
    S3Point target = knot_point(emb, theta + shift);
    double dist2 = 0.0;
    for (int c = 0; c < 4; ++c) dist2 += (mapped[c] - target[c]) * (mapped[c] - target[c]);
    worst = std::max(worst, std::sqrt(dist2));
  }
  return worst;
}

std::int64_t linking_with_axis(const EmbeddingParams& emb, const RadiusProfile& profile) {
  double total = 0.0;
  std::size_t n = profile.thetas.size();
  for (std::size_t i = 0; i < n; ++i) {
    S3Point a = knot_point(emb, profile.thetas[i]);
    S3Point b = knot_point(emb, profile.thetas[(i + 1) % n]);
    double ang_a = std::atan2(a[1], a[0]);
    double ang_b = std::atan2(b[1], b[0]);
    double delta = ang_b - ang_a;
    while (delta > kPi) delta -= 2.0 * kPi;
    while (delta < -kPi) delta += 2.0 * kPi;
    total += delta;
  }
  return std::llround(total / (2.0 * kPi));
}

R3Point embed_r3(const KnotParams& knot, double t) {
  double cn = std::cos(static_cast<double>(knot.N) * t);
  double sn = std::sin(static_cast<double>(knot.N) * t);
  double sq = std::sin(static_cast<double>(knot.q) * t);
  return {2.0 * cn - cn * sq, 2.0 * sn - sn * sq, std::cos(static_cast<double>(knot.p) * t)};
}

std::string export_r3_csv(const KnotParams& knot, std::int64_t samples) {
  std::ostringstream os;
  os << "t,x,y,z\n";
  for (std::int64_t i = 0; i < samples; ++i) {
    double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples);
    R3Point p = embed_r3(knot, t);
    os << fmt(t) << "," << fmt(p.x) << "," << fmt(p.y) << "," << fmt(p.z) << "\n";
  }
  return os.str();
}

std::string export_s3_csv(const EmbeddingParams& emb, const RadiusProfile& profile) {
  std::ostringstream os;
  os << "theta,r,re(z1),im(z1),re(z2),im(z2)\n";
  for (std::size_t i = 0; i < profile.thetas.size(); ++i) {
    S3Point p = knot_point(emb, profile.thetas[i]);
    os << fmt(profile.thetas[i]) << "," << fmt(profile.radii[i]) << "," << fmt(p[0]) << ","
       << fmt(p[1]) << "," << fmt(p[2]) << "," << fmt(p[3]) << "\n";
  }
  return os.str();
}

}  // namespace knots
