#include "scgd/generic_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "scgd/sidon.hpp"

namespace scgd {

namespace {

// Positions into the 12,13,14,23,24,34 pair order that share a vertex.
// Exactly the pairs of positions other than the three opposite ones
// (12|34, 13|24, 14|23).
bool positions_share_vertex(int p, int q) {
  const auto& a = kPairOrder[p];
  const auto& b = kPairOrder[q];
  return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
}

Vec2<Rational> direction(const SlopeQ& s) {
  return Vec2<Rational>(Rational(s.dx), Rational(s.dy));
}

// Position permutations induced by the 24 relabelings of quadruple vertices.
std::vector<std::array<int, 6>> relabeling_position_maps() {
  std::array<int, 4> perm = {0, 1, 2, 3};
  auto pos_of = [](int i, int j) {
    if (i > j) std::swap(i, j);
    for (int p = 0; p < 6; ++p)
      if (kPairOrder[p][0] == i && kPairOrder[p][1] == j) return p;
    return -1;
  };
  std::vector<std::array<int, 6>> maps;
  do {
    std::array<int, 6> m;
    for (int p = 0; p < 6; ++p)
      m[p] = pos_of(perm[kPairOrder[p][0]], perm[kPairOrder[p][1]]);
    maps.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace

GenericSet build_generic(int count, std::int64_t base) {
  if (count < 1) throw std::invalid_argument("build_generic: count must be positive");
  if (base < 2) throw std::invalid_argument("build_generic: base must be at least 2");
  GenericSet gs;
  gs.base = base;
  gs.exponents = greedy_bh(3, count).terms;
  gs.points.reserve(count);
  for (const std::int64_t c : gs.exponents) {
    const BigInt x = pow_bigint(BigInt(base), static_cast<unsigned long>(c));
    gs.points.emplace_back(Rational(x), Rational(x * x));
  }
  return gs;
}

std::optional<QuadQ> realize_quadruple(const std::array<SlopeQ, 6>& m) {
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      if (positions_share_vertex(p, q) && m[p] == m[q])
        throw std::invalid_argument(
            "realize_quadruple: slopes sharing a vertex must differ");
  const PointQ e1(Rational(0), Rational(0));
  const PointQ e2 = m[0].vertical()
                        ? PointQ(Rational(0), Rational(1))
                        : PointQ(Rational(1), m[0].value());
  // E3 from the slopes at vertex pairs 13 and 23, E4 from 14 and 24; the
  // remaining slope m34 is then a genuine constraint.
  const auto e3 = line_intersect<Rational>(e1, direction(m[1]), e2, direction(m[3]));
  const auto e4 = line_intersect<Rational>(e1, direction(m[2]), e2, direction(m[4]));
  if (!e3 || !e4) return std::nullopt;
  if (same_point<Rational>(*e3, *e4)) return std::nullopt;
  QuadQ quad{e1, e2, *e3, *e4};
  if (slope_of<Rational>(*e3, *e4) != m[5]) return std::nullopt;
  if (!is_simple<Rational>(to_list(quad))) return std::nullopt;
  return quad;
}

GenericCheck check_slope_generic(const PointList<Rational>& a) {
  if (!has_distinct_slopes<Rational>(a))
    throw std::invalid_argument("check_slope_generic: set must have distinct slopes");
  const SlopeList<Rational> slopes = slope_set<Rational>(a);
  const int ns = static_cast<int>(slopes.size());
  static const std::vector<std::array<int, 6>> kRelabelings =
      relabeling_position_maps();

  GenericCheck result;
  result.ok = true;

  std::array<int, 6> pick{};
  auto canonical = [&]() {
    for (const auto& map : kRelabelings) {
      for (int p = 0; p < 6; ++p) {
        const int lhs = pick[map[p]];
        if (lhs != pick[p]) {
          if (lhs < pick[p]) return false;  // a smaller relabeling exists
          break;
        }
      }
    }
    return true;
  };

  auto admissible_at = [&](int p) {
    for (int q = 0; q < p; ++q)
      if (positions_share_vertex(p, q) && pick[q] == pick[p]) return false;
    return true;
  };

  // Depth-first over ordered sextuple assignments with early vertex pruning.
  auto visit = [&](auto&& self, int p) -> void {
    if (p == 6) {
      if (!canonical()) return;
      std::array<SlopeQ, 6> m;
      for (int i = 0; i < 6; ++i) m[i] = slopes[pick[i]];
      const auto quad = realize_quadruple(m);
      if (!quad) return;
      RealizedQuadruple rq;
      rq.slopes = m;
      rq.quad = *quad;
      rq.embeds_direct = embeds<Rational>(to_list(*quad), a).has_value();
      rq.embeds_dual =
          embeds<Rational>(to_list(dual<Rational>(*quad)), a).has_value();
      if (!rq.embeds_direct && !rq.embeds_dual && result.ok) {
        result.ok = false;
        result.counterexample = *quad;
      }
      result.realized.push_back(std::move(rq));
      return;
    }
    for (pick[p] = 0; pick[p] < ns; ++pick[p])
      if (admissible_at(p)) self(self, p + 1);
  };
  visit(visit, 0);
  return result;
}

int classify_parabola_case(const GenericSet& gs, const std::array<SlopeQ, 6>& m) {
  std::map<Rational, std::pair<int, int>> decode;
  const int n = static_cast<int>(gs.exponents.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational value =
          Rational(pow_bigint(BigInt(gs.base),
                              static_cast<unsigned long>(gs.exponents[i]))) +
          Rational(pow_bigint(BigInt(gs.base),
                              static_cast<unsigned long>(gs.exponents[j])));
      decode[value] = {i, j};
    }

  std::array<std::pair<int, int>, 6> pairs;
  for (int p = 0; p < 6; ++p) {
    if (m[p].vertical()) return 0;
    const auto it = decode.find(m[p].value());
    if (it == decode.end()) return 0;
    pairs[p] = it->second;
  }

  auto direct = [&](const std::array<std::pair<int, int>, 6>& pr) {
    // Vertex labels from the pairs at positions 12, 13, 14; then check all.
    for (const int y1 : {pr[0].first, pr[0].second}) {
      std::array<int, 4> y{y1, -1, -1, -1};
      auto other = [](const std::pair<int, int>& p, int v) {
        return p.first == v ? p.second : (p.second == v ? p.first : -1);
      };
      y[1] = other(pr[0], y1);
      y[2] = other(pr[1], y1);
      y[3] = other(pr[2], y1);
      if (y[1] < 0 || y[2] < 0 || y[3] < 0) continue;
      bool ok = true;
      for (int p = 0; p < 6; ++p) {
        const int a = y[kPairOrder[p][0]], b = y[kPairOrder[p][1]];
        const std::pair<int, int> want{std::min(a, b), std::max(a, b)};
        if (pr[p] != want) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  std::array<std::pair<int, int>, 6> complemented;
  for (int p = 0; p < 6; ++p) complemented[p] = pairs[5 - p];
  return (direct(pairs) ? 1 : 0) | (direct(complemented) ? 2 : 0);
}

}  // namespace scgd
