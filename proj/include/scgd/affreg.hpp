#pragma once

// Affinely regular polygons: orbits of a point under an affine map of finite
// order.  Everything here runs in float mode; order detection and slope
// comparisons are tolerance-based.

#include <array>
#include <optional>
#include <random>

#include "scgd/geometry.hpp"
#include "scgd/quadruple.hpp"
#include "scgd/slope.hpp"

namespace scgd {

// Max-norm identity threshold for order detection, over the six affine
// coefficients.
inline constexpr double kOrderTol = 1e-6;

struct AffRegPolygon {
  PointList<double> vertices;  // consecutive along the polygon
  AffineMapD generator;        // maps vertex i to vertex i+1
  int order = 0;
};

// Unit-circle regular n-gon, n >= 3; generator is the rotation by 2*pi/n.
AffRegPolygon regular_ngon(int n);

// Image polygon under an invertible affine map.
AffRegPolygon affine_image(const AffRegPolygon& p, const AffineMapD& phi);

// Image of the regular n-gon under a random affine map with entries in
// [-2, 2], resampled until |det| >= 0.3 to keep the image well conditioned.
AffRegPolygon random_affreg_polygon(int n, std::mt19937_64& rng);

double identity_distance(const AffineMapD& m);

// Smallest d <= max_order with m^d within tol of the identity; none if every
// power up to max_order stays away.
std::optional<int> affine_order(const AffineMapD& m, int max_order,
                                double tol = kOrderTol);

// The d slopes of a d-gon indexed by vertex-sum: slope(P_i P_j) depends only
// on (i+j) mod d.  s[0] = slope(P_(d-1), P_1) and s[i] = slope(P_0, P_i).
struct PolygonSlopeProfile {
  SlopeList<double> s;
  SlopeList<double> boundary;  // edge slopes P_0P_1, ..., P_(d-1)P_0
};

PolygonSlopeProfile slope_profile(const AffRegPolygon& p);

// s runs through all slopes in cyclic order (one wrap, either orientation).
bool profile_cyclic_order_ok(const PolygonSlopeProfile& prof);

// boundary[i] == s[(2i+1) mod d], which covers the odd interleaving and the
// doubled even pattern at once.
bool profile_boundary_ok(const PolygonSlopeProfile& prof, double eps = 1e-8);

// Given a sorted slope set s and 4 consecutive vertices p of a candidate
// polygon, recover the affine map through the three correspondences, find its
// order d in [k, |s|], and accept when all orbit slopes lie in s.
std::optional<AffRegPolygon> four_points_query(const SlopeList<double>& s,
                                               int k, const QuadD& p,
                                               double eps = kSlopeEps,
                                               double order_tol = kOrderTol);

// Quadruple patterns realizing four consecutive slopes t0..t3:
//   variant 1: slope(P0P1)=t0, slope(P0P2)=t1, slope(P1P2)=slope(P0P3)=t2,
//              slope(P1P3)=t3
//   variant 2: slope(P0P2)=t0, slope(P1P2)=slope(P0P3)=t1, slope(P1P3)=t2,
//              slope(P2P3)=t3
// The four slopes must be pairwise distinct; the result is simple.
std::optional<QuadD> quad_from_slopes(const std::array<SlopeD, 4>& t,
                                      int variant, double eps = kSlopeEps);

struct FourSlopesResult {
  AffRegPolygon polygon;
  int variant = 0;
};

// Tries both quadruple patterns on t and runs the four-points query.
std::optional<FourSlopesResult> four_slopes_query(const SlopeList<double>& s,
                                                  int k,
                                                  const std::array<SlopeD, 4>& t,
                                                  double eps = kSlopeEps,
                                                  double order_tol = kOrderTol);

}  // namespace scgd
