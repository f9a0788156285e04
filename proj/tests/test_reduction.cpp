#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scgd/reduction.hpp"

using namespace scgd;

namespace {

Graph complete_graph(int n) {
  Graph g;
  g.vertices = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  return g;
}

Graph petersen() {
  Graph g;
  g.vertices = 10;
  auto add = [&g](int u, int v) {
    g.edges.push_back({std::min(u, v), std::max(u, v)});
  };
  for (int i = 0; i < 5; ++i) {
    add(i, (i + 1) % 5);          // outer cycle
    add(i, i + 5);                // spokes
    add(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

}  // namespace

TEST_CASE("graph validation") {
  Graph g;
  g.vertices = 3;
  g.edges = {{0, 1}, {1, 2}};
  CHECK_NOTHROW(validate_graph(g));
  g.edges.push_back({2, 2});
  CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  g.edges.back() = {2, 3};
  CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  g.edges.back() = {1, 0};
  CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);  // duplicate of 0-1
}

TEST_CASE("witness validation") {
  Witness w;
  w.k = 3;
  w.triples = {{1, 2, SlopeQ::from_value(Rational(0))},
               {1, 3, SlopeQ::from_value(Rational(1))},
               {2, 3, SlopeQ::from_value(Rational(2))}};
  CHECK_NOTHROW(validate_witness(w));
  w.triples.pop_back();
  CHECK_THROWS_AS(validate_witness(w), std::invalid_argument);
  w.triples.push_back({2, 2, SlopeQ::from_value(Rational(2))});
  CHECK_THROWS_AS(validate_witness(w), std::invalid_argument);
}

TEST_CASE("encode_clique shapes the instance") {
  const Graph g = petersen();
  CHECK_THROWS_AS(encode_clique(g, 4), std::invalid_argument);
  const Reduction red = encode_clique(g, 5);
  CHECK(red.instance.k == 5);
  CHECK(red.instance.slopes.size() == g.edges.size());
  CHECK(std::is_sorted(red.instance.slopes.begin(), red.instance.slopes.end(),
                       [](const SlopeQ& a, const SlopeQ& b) { return a < b; }));
  CHECK(red.labeling.set.points.size() == 10);

  const Reduction half = encode_clique(g, 0, true);
  CHECK(half.instance.k == 5);  // ceil(10 / 2)
}

TEST_CASE("edge slopes decode back to their endpoints") {
  const Graph g = petersen();
  const Reduction red = encode_clique(g, 5);
  for (const auto& e : g.edges) {
    const SlopeQ s = slope_of<Rational>(red.labeling.set.points[e[0]],
                                        red.labeling.set.points[e[1]]);
    CHECK(decode_slope(s, red.labeling) == e);
  }
  CHECK_THROWS_AS(decode_slope(SlopeQ::from_value(Rational(9)), red.labeling),
                  std::invalid_argument);
  CHECK_THROWS_AS(decode_slope(SlopeQ::vertical_slope(), red.labeling),
                  std::invalid_argument);
}

TEST_CASE("clique witnesses verify and tampering is caught") {
  Graph g = complete_graph(5);
  g.vertices = 7;  // two isolated extras
  const Reduction red = encode_clique(g, 5);
  const auto clique = find_clique(g, 5);
  REQUIRE(clique.has_value());
  const Witness w = witness_from_clique(*clique, red.labeling);
  const WitnessReport rep = verify_witness(red.instance, w);
  REQUIRE_MESSAGE(rep.ok, rep.reason);
  REQUIRE(rep.points.size() == 5);
  CHECK(same_point<Rational>(rep.points[0], PointQ(0, 0)));
  for (const auto& t : w.triples)
    CHECK(slope_of<Rational>(rep.points[t.i - 1], rep.points[t.j - 1]) == t.s);

  Witness outside = w;
  outside.triples[0].s = SlopeQ::from_value(Rational(1234567));
  CHECK(verify_witness(red.instance, outside).reason ==
        "slope outside the instance");

  Witness repeated = w;
  repeated.triples[1].s = repeated.triples[0].s;  // pairs 12 and 13 share vertex 1
  CHECK(verify_witness(red.instance, repeated).reason ==
        "equal slopes on pairs sharing an index");

  Witness wrong_k = w;
  wrong_k.k = 4;
  CHECK_THROWS_AS(verify_witness(red.instance, wrong_k), std::invalid_argument);
}

TEST_CASE("non-clique slope assignments fail realization") {
  // Parallelogram-with-crossed-diagonals pattern: the cubic relation fails,
  // so the pinned linear system only has the trivial solution.
  Witness w;
  w.k = 4;
  const int vals[6] = {0, 1, 2, 2, 1, 0};
  int p = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      w.triples.push_back({i, j, SlopeQ::from_value(Rational(vals[p]))});
      ++p;
    }
  CHECK_FALSE(solve_from_witness(w).has_value());
}

TEST_CASE("find_clique") {
  const Graph p = petersen();
  CHECK(find_clique(p, 2).has_value());
  CHECK_FALSE(find_clique(p, 3).has_value());  // triangle free
  const Graph k6 = complete_graph(6);
  const auto six = find_clique(k6, 6);
  REQUIRE(six.has_value());
  CHECK(six->size() == 6);
  CHECK_FALSE(find_clique(k6, 7).has_value());
  CHECK(find_clique(k6, 0).has_value());
}

TEST_CASE("full pipeline on a graph with and without the target clique") {
  Graph g = petersen();
  const Reduction red = encode_clique(g, 0, true);  // k = 5, no 5-clique
  CHECK_FALSE(find_clique(g, red.instance.k).has_value());

  // Adding a 5-clique flips the answer and the witness verifies.
  for (int u : {0, 1, 5, 6})
    for (int v : {1, 5, 6, 8})
      if (u < v && !std::count(g.edges.begin(), g.edges.end(),
                               std::array<int, 2>{u, v}))
        g.edges.push_back({u, v});
  const auto clique = find_clique(g, 5);
  REQUIRE(clique.has_value());
  const Reduction red2 = encode_clique(g, 5);
  const Witness w = witness_from_clique(*clique, red2.labeling);
  const WitnessReport rep = verify_witness(red2.instance, w);
  CHECK_MESSAGE(rep.ok, rep.reason);
  // The verified witness decodes back to a clique of the graph.
  for (const auto& t : w.triples) {
    const auto uv = decode_slope(t.s, red2.labeling);
    CHECK(std::count(g.edges.begin(), g.edges.end(), uv));
  }
}
