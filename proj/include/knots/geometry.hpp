#pragma once

#include "knots/params.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace knots {

/// Real positive amplitudes of the defining map
///   phi(z) = (z^N, a(z^q - conj(z)^q) + b(z^p + conj(z)^p)).
struct EmbeddingParams {
  KnotParams knot;
  double a = 0.5;
  double b = 0.5;
};

/// Solved radius function r(theta) placing phi(r e^{i theta}) on the unit sphere.
struct RadiusProfile {
  std::vector<double> thetas;
  std::vector<double> radii;
};

/// Point of the knot in C^2 ~ R^4, components (re z1, im z1, re z2, im z2).
using S3Point = std::array<double, 4>;

/// Solves r^{2N} + 4a^2 r^{2q} sin^2(q theta) + 4b^2 r^{2p} cos^2(p theta) = 1
/// by bisection on (0, 1]; the left side is strictly increasing in r.
double radius_at(const EmbeddingParams& emb, double theta);

RadiusProfile radius_profile(const EmbeddingParams& emb, std::int64_t grid_size);

S3Point knot_point(const EmbeddingParams& emb, double theta);

/// max over the grid of |r(theta + 2 pi / d) - r(theta)|, with fresh solves at
/// the shifted angles.
double radius_periodicity_deviation(const EmbeddingParams& emb, const RadiusProfile& profile);

/// The rotation Psi(z1, z2) = (e^{2 pi i N / d} z1, z2) restricted to S^3.
S3Point apply_psi(const EmbeddingParams& emb, const S3Point& x);

/// max over the grid of |Psi(x(theta)) - x(theta + 2 pi / d)|; requires d > 1
/// (throws NotPeriodicParams otherwise). Invariance of the knot under Psi
/// drives this to solver precision.
double psi_invariance_deviation(const EmbeddingParams& emb, const RadiusProfile& profile);

/// Winding number of the z1 component around the fixed-point axis {z1 = 0},
/// a signed-crossing count for the linking of the knot with that circle.
std::int64_t linking_with_axis(const EmbeddingParams& emb, const RadiusProfile& profile);

struct R3Point {
  double x = 0, y = 0, z = 0;
};

/// x = 2cos(Nt) - cos(Nt) sin(qt), y = 2sin(Nt) - sin(Nt) sin(qt), z = cos(pt).
R3Point embed_r3(const KnotParams& knot, double t);

/// CSV "t,x,y,z" over a uniform parameter grid on [0, 2 pi).
std::string export_r3_csv(const KnotParams& knot, std::int64_t samples);

/// CSV "theta,r,re(z1),im(z1),re(z2),im(z2)" over the profile grid.
std::string export_s3_csv(const EmbeddingParams& emb, const RadiusProfile& profile);

}  // namespace knots
