#pragma once

// Slope-generic point sets: every simple quadruple whose six segment slopes
// all occur among the set's slopes embeds into the set directly or through
// its dual.  Construction: points (base^c, base^(2c)) for a B_3 exponent
// sequence c, so the slope between points i and j is base^(c_i) + base^(c_j).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scgd/quadruple.hpp"
#include "scgd/slope.hpp"

namespace scgd {

struct GenericSet {
  std::int64_t base = 50;
  std::vector<std::int64_t> exponents;
  PointList<Rational> points;
};

// count >= 1, base >= 2.  Exponents are the greedy B_3 prefix.
GenericSet build_generic(int count, std::int64_t base = 50);

// One simple quadruple (modulo homothety) with the given labeled slope
// sextuple (m12, m13, m14, m23, m24, m34), or none when the sextuple is not
// realizable.  Pins E1 = (0,0) and E2 = (1, m12) ((0,1) when m12 vertical).
// Slopes sharing a quadruple vertex must be pairwise distinct.
std::optional<QuadQ> realize_quadruple(const std::array<SlopeQ, 6>& m);

struct RealizedQuadruple {
  std::array<SlopeQ, 6> slopes;
  QuadQ quad;
  bool embeds_direct = false;  // quad itself maps into the set
  bool embeds_dual = false;    // its dual maps into the set
};

struct GenericCheck {
  bool ok = false;
  // First realized quadruple that embeds neither way, when !ok.
  std::optional<QuadQ> counterexample;
  std::vector<RealizedQuadruple> realized;  // one per relabeling class
};

// Exhaustive modulo quadruple relabeling; requires has_distinct_slopes(a).
GenericCheck check_slope_generic(const PointList<Rational>& a);

// For sextuples over a parabola set: bit 1 when the decoded exponent pairs
// give the direct K4 labeling m_ij = {y_i, y_j}, bit 2 for the complementary
// labeling m_ij = {y_k, y_l}; 0 when neither fits.
int classify_parabola_case(const GenericSet& gs, const std::array<SlopeQ, 6>& m);

}  // namespace scgd
