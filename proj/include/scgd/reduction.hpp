#pragma once

// Reduction from clique finding to slope-constrained drawing of a complete
// graph: map vertex v to the parabola point of a slope-generic set, take as
// slope budget the edge slopes, and certify drawings by a labeled slope
// witness whose linear system must admit a nontrivial solution.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scgd/generic_sets.hpp"
#include "scgd/slope.hpp"

namespace scgd {

struct Graph {
  int vertices = 0;
  std::vector<std::array<int, 2>> edges;  // 0-based, u < v after validation
};

// Throws on out-of-range endpoints, self loops, duplicate edges.
void validate_graph(const Graph& g);

struct ScgdInstance {
  SlopeList<Rational> slopes;
  int k = 0;
};

struct WitnessTriple {
  int i = 0, j = 0;  // 1-based, i < j
  SlopeQ s;
};

// Slope assignment for every vertex pair of a k-point drawing.
struct Witness {
  int k = 0;
  std::vector<WitnessTriple> triples;
};

// Throws unless the triples cover each pair 1 <= i < j <= k exactly once.
void validate_witness(const Witness& w);

struct Labeling {
  GenericSet set;  // vertex v sits at set.points[v]
};

struct Reduction {
  ScgdInstance instance;
  Labeling labeling;
};

// k >= 5 unless half_clique, which overrides k to ceil(|V|/2).
Reduction encode_clique(const Graph& g, int k, bool half_clique = false);

// Vertex pair whose parabola x-coordinates sum to the slope value; throws
// when the slope does not decode.
std::array<int, 2> decode_slope(const SlopeQ& s, const Labeling& lab);

struct WitnessReport {
  bool ok = false;
  std::string reason;              // first failed check when !ok
  PointList<Rational> points;      // realization with P1 at the origin
};

// Checks: slopes belong to the instance, triples sharing an index carry
// distinct slopes, the pinned linear system has a nontrivial solution, and
// the realized points are pairwise distinct with matching slopes.
WitnessReport verify_witness(const ScgdInstance& inst, const Witness& w);

// Realization only (no instance membership check), or none.
std::optional<PointList<Rational>> solve_from_witness(const Witness& w);

Witness witness_from_clique(const std::vector<int>& clique, const Labeling& lab);

// Brute-force k-subset search; test oracle, fine up to a few dozen vertices.
std::optional<std::vector<int>> find_clique(const Graph& g, int k);

}  // namespace scgd
