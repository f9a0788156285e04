#pragma once

// Ordered quadruples of points, their slope sextuples, the cubic slope
// relation q_poly, and the dual quadruple construction.

#include <array>
#include <optional>
#include <stdexcept>

#include "scgd/geometry.hpp"
#include "scgd/slope.hpp"

namespace scgd {

template <class S>
using Quad = std::array<Point<S>, 4>;

using QuadQ = Quad<Rational>;
using QuadD = Quad<double>;

template <class S>
PointList<S> to_list(const Quad<S>& q) {
  return PointList<S>(q.begin(), q.end());
}

// Pair positions in the fixed order 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::array<int, 2>, 6> kPairOrder = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class S>
std::array<Slope<S>, 6> slope_sextuple(const Quad<S>& e) {
  std::array<Slope<S>, 6> m;
  for (int p = 0; p < 6; ++p)
    m[p] = slope_of<S>(e[kPairOrder[p][0]], e[kPairOrder[p][1]]);
  return m;
}

// (z3-z5)(z6-z2)(z4-z1) - (z2-z4)(z5-z1)(z6-z3); vanishes exactly on the
// slope sextuples of simple quadruples with finite slopes.
template <class S>
S q_poly(const std::array<S, 6>& z) {
  const S& z1 = z[0];
  const S& z2 = z[1];
  const S& z3 = z[2];
  const S& z4 = z[3];
  const S& z5 = z[4];
  const S& z6 = z[5];
  return S((z3 - z5) * (z6 - z2) * (z4 - z1) -
           (z2 - z4) * (z5 - z1) * (z6 - z3));
}

// Dual of a simple quadruple:
//   F1 = line(E2,E4)  meet  line through E1 parallel to E2E3
//   F2 = line(E1,E3)  meet  line through E2 parallel to E1E4
//   F3 = E2, F4 = E1
// Simplicity of E guarantees both intersections exist and are unique.
template <class S>
Quad<S> dual(const Quad<S>& e, double eps = kSlopeEps) {
  if (!is_simple<S>(to_list(e), eps))
    throw std::invalid_argument("dual needs a simple quadruple");
  const auto f1 = line_intersect<S>(e[1], Vec2<S>(e[3] - e[1]), e[0],
                                    Vec2<S>(e[2] - e[1]), eps);
  const auto f2 = line_intersect<S>(e[0], Vec2<S>(e[2] - e[0]), e[1],
                                    Vec2<S>(e[3] - e[0]), eps);
  if (!f1 || !f2) throw std::invalid_argument("degenerate dual intersection");
  return Quad<S>{*f1, *f2, e[1], e[0]};
}

}  // namespace scgd
