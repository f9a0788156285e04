#include "scgd/reduction.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace scgd {

namespace {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Rows: dy*(Xj - Xi) - dx*(Yj - Yi) = 0 with X1 = Y1 = 0 substituted.
// Columns: X2..Xk then Y2..Yk.
MatQ witness_system(const Witness& w) {
  const int k = w.k;
  const int cols = 2 * (k - 1);
  MatQ m = MatQ::Zero(static_cast<int>(w.triples.size()), cols);
  int row = 0;
  for (const auto& t : w.triples) {
    const Rational dx(t.s.dx), dy(t.s.dy);
    if (t.i > 1) {
      m(row, t.i - 2) = -dy;
      m(row, k - 1 + t.i - 2) = dx;
    }
    m(row, t.j - 2) = dy;
    m(row, k - 1 + t.j - 2) = -dx;
    ++row;
  }
  return m;
}

std::optional<PointList<Rational>> realize(const Witness& w) {
  const MatQ m = witness_system(w);
  Eigen::FullPivLU<MatQ> lu(m);
  lu.setThreshold(Rational(0));
  if (lu.dimensionOfKernel() < 1) return std::nullopt;
  const VecQ null_vec = lu.kernel().col(0);
  const int k = w.k;
  PointList<Rational> pts;
  pts.reserve(k);
  pts.emplace_back(Rational(0), Rational(0));
  for (int i = 2; i <= k; ++i)
    pts.emplace_back(null_vec(i - 2), null_vec(k - 1 + i - 2));
  return pts;
}

bool realization_matches(const PointList<Rational>& pts, const Witness& w) {
  if (!pairwise_distinct<Rational>(pts)) return false;
  for (const auto& t : w.triples)
    if (slope_of<Rational>(pts[t.i - 1], pts[t.j - 1]) != t.s) return false;
  return true;
}

}  // namespace

void validate_graph(const Graph& g) {
  if (g.vertices < 1) throw std::invalid_argument("graph needs vertices");
  std::set<std::array<int, 2>> seen;
  for (const auto& e : g.edges) {
    const int u = std::min(e[0], e[1]), v = std::max(e[0], e[1]);
    if (u < 0 || v >= g.vertices) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loop");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
  }
}

void validate_witness(const Witness& w) {
  if (w.k < 2) throw std::invalid_argument("witness needs k >= 2");
  std::set<std::pair<int, int>> seen;
  for (const auto& t : w.triples) {
    if (t.i < 1 || t.j <= t.i || t.j > w.k)
      throw std::invalid_argument("witness indices must satisfy 1 <= i < j <= k");
    if (!seen.emplace(t.i, t.j).second)
      throw std::invalid_argument("duplicate witness pair");
  }
  if (seen.size() != static_cast<std::size_t>(w.k) * (w.k - 1) / 2)
    throw std::invalid_argument("witness must cover every pair exactly once");
}

Reduction encode_clique(const Graph& g, int k, bool half_clique) {
  validate_graph(g);
  if (half_clique)
    k = (g.vertices + 1) / 2;
  else if (k < 5)
    throw std::invalid_argument("encode_clique: k < 5 needs the half-clique mode");
  Reduction r;
  r.labeling.set = build_generic(g.vertices);
  SlopeList<Rational> slopes;
  slopes.reserve(g.edges.size());
  for (const auto& e : g.edges)
    slopes.push_back(slope_of<Rational>(r.labeling.set.points[e[0]],
                                        r.labeling.set.points[e[1]]));
  r.instance.slopes = make_slope_set<Rational>(std::move(slopes));
  r.instance.k = k;
  return r;
}

std::array<int, 2> decode_slope(const SlopeQ& s, const Labeling& lab) {
  const auto& pts = lab.set.points;
  std::map<Rational, std::array<int, 2>> sums;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pts.size()); ++j)
      sums[Rational(pts[i].x() + pts[j].x())] = {i, j};
  if (s.vertical()) throw std::invalid_argument("vertical slope does not decode");
  const auto it = sums.find(s.value());
  if (it == sums.end())
    throw std::invalid_argument("slope is not a sum of two distinct labeled powers");
  return it->second;
}

WitnessReport verify_witness(const ScgdInstance& inst, const Witness& w) {
  validate_witness(w);
  WitnessReport rep;
  if (w.k != inst.k) {
    rep.reason = "witness k differs from instance k";
    return rep;
  }
  for (const auto& t : w.triples)
    if (!slope_set_contains<Rational>(inst.slopes, t.s)) {
      rep.reason = "slope outside the instance";
      return rep;
    }
  for (std::size_t a = 0; a < w.triples.size(); ++a)
    for (std::size_t b = a + 1; b < w.triples.size(); ++b) {
      const auto& s = w.triples[a];
      const auto& t = w.triples[b];
      const bool share = s.i == t.i || s.i == t.j || s.j == t.i || s.j == t.j;
      if (share && s.s == t.s) {
        rep.reason = "equal slopes on pairs sharing an index";
        return rep;
      }
    }
  auto pts = realize(w);
  if (!pts) {
    rep.reason = "linear system has only the trivial solution";
    return rep;
  }
  if (!realization_matches(*pts, w)) {
    rep.reason = "realized points degenerate or slopes mismatch";
    return rep;
  }
  rep.ok = true;
  rep.points = std::move(*pts);
  return rep;
}

std::optional<PointList<Rational>> solve_from_witness(const Witness& w) {
  validate_witness(w);
  auto pts = realize(w);
  if (!pts || !realization_matches(*pts, w)) return std::nullopt;
  return pts;
}

Witness witness_from_clique(const std::vector<int>& clique, const Labeling& lab) {
  std::vector<int> vs = clique;
  std::sort(vs.begin(), vs.end());
  Witness w;
  w.k = static_cast<int>(vs.size());
  for (int i = 0; i < w.k; ++i)
    for (int j = i + 1; j < w.k; ++j)
      w.triples.push_back({i + 1, j + 1,
                           slope_of<Rational>(lab.set.points[vs[i]],
                                              lab.set.points[vs[j]])});
  return w;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
  validate_graph(g);
  if (k > g.vertices) return std::nullopt;
  if (k <= 0) return std::vector<int>{};
  if (g.vertices > 64) throw std::invalid_argument("find_clique: too many vertices");
  std::vector<std::uint64_t> adj(g.vertices, 0);
  for (const auto& e : g.edges) {
    adj[e[0]] |= std::uint64_t{1} << e[1];
    adj[e[1]] |= std::uint64_t{1} << e[0];
  }
  std::vector<int> pick;
  auto extend = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(pick.size()) == k) return true;
    for (int v = next; v < g.vertices; ++v) {
      bool all = true;
      for (const int u : pick)
        if (!(adj[u] >> v & 1)) {
          all = false;
          break;
        }
      if (!all) continue;
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (extend(extend, 0)) return pick;
  return std::nullopt;
}

}  // namespace scgd
