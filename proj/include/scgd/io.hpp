#pragma once

// JSON schemas and SVG rendering for the CLI.  Exact values travel as
// "num/den" strings (bare "num" when the denominator is 1), floats as JSON
// numbers, vertical slopes as "inf".  A document's arithmetic mode is
// inferred from its literals; mixing kinds is an error.

#include <json.hpp>

#include <string>

#include "scgd/affreg.hpp"
#include "scgd/reduction.hpp"
#include "scgd/slope.hpp"
#include "scgd/solver.hpp"

namespace scgd {

enum class Mode { Exact, Float };

struct ParsedPoints {
  Mode mode = Mode::Exact;
  PointList<Rational> exact;
  PointList<double> flt;
};

struct ParsedInstance {
  Mode mode = Mode::Exact;
  SlopeList<Rational> exact;
  SlopeList<double> flt;
  int k = 0;
  bool reordered = false;  // input slopes were not already sorted distinct
};

nlohmann::json rational_json(const Rational& q);
Rational json_rational(const nlohmann::json& j);

nlohmann::json slope_json(const SlopeQ& s);
nlohmann::json slope_json(const SlopeD& s);

nlohmann::json points_json(const PointList<Rational>& pts);
nlohmann::json points_json(const PointList<double>& pts);
ParsedPoints parse_points(const nlohmann::json& doc);

nlohmann::json instance_json(const ScgdInstance& inst);
ParsedInstance parse_instance(const nlohmann::json& doc);

Graph parse_graph(const nlohmann::json& doc);
nlohmann::json graph_json(const Graph& g);

Witness parse_witness(const nlohmann::json& doc);
nlohmann::json witness_json(const Witness& w);

nlohmann::json labeling_json(const Labeling& lab);
nlohmann::json polygon_json(const AffRegPolygon& p);
nlohmann::json answer_json(const SolverAnswer& ans);

// Standalone SVG with all pairwise segments beneath the points.  Requires
// coordinates representable as doubles.
std::string render_svg(const PointList<double>& pts);

}  // namespace scgd
