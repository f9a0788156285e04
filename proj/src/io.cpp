#include "scgd/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace scgd {

namespace {

constexpr const char* kVertical = "inf";

// Literal kinds drive mode inference; "inf" fits both modes.
enum class Kind { Neutral, Exact, Float };

Kind literal_kind(const nlohmann::json& j) {
  if (j.is_number()) return Kind::Float;
  if (j.is_string())
    return j.get<std::string>() == kVertical ? Kind::Neutral : Kind::Exact;
  throw std::invalid_argument("expected a number or a rational string");
}

Mode resolve_mode(const std::vector<Kind>& kinds) {
  bool has_exact = false, has_float = false;
  for (const Kind k : kinds) {
    has_exact |= k == Kind::Exact;
    has_float |= k == Kind::Float;
  }
  if (has_exact && has_float)
    throw std::invalid_argument("document mixes exact and float literals");
  return has_float ? Mode::Float : Mode::Exact;
}

double json_double(const nlohmann::json& j) {
  if (!j.is_number()) throw std::invalid_argument("expected a number");
  return j.get<double>();
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

nlohmann::json rational_json(const Rational& q) { return format_rational(q); }

Rational json_rational(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return parse_rational(j.get<std::string>());
}

nlohmann::json slope_json(const SlopeQ& s) {
  if (s.vertical()) return kVertical;
  return format_rational(s.value());
}

nlohmann::json slope_json(const SlopeD& s) {
  if (s.vertical()) return kVertical;
  return s.value();
}

nlohmann::json points_json(const PointList<Rational>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts)
    arr.push_back({rational_json(p.x()), rational_json(p.y())});
  return nlohmann::json{{"points", arr}};
}

nlohmann::json points_json(const PointList<double>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back({p.x(), p.y()});
  return nlohmann::json{{"points", arr}};
}

ParsedPoints parse_points(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw std::invalid_argument("points document needs a \"points\" array");
  std::vector<Kind> kinds;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || row.size() != 2)
      throw std::invalid_argument("each point is a two-element array");
    kinds.push_back(literal_kind(row[0]));
    kinds.push_back(literal_kind(row[1]));
  }
  ParsedPoints out;
  for (const Kind k : kinds)
    if (k == Kind::Neutral)
      throw std::invalid_argument("\"inf\" is not a coordinate");
  out.mode = resolve_mode(kinds);
  for (const auto& row : doc["points"]) {
    if (out.mode == Mode::Exact)
      out.exact.emplace_back(json_rational(row[0]), json_rational(row[1]));
    else
      out.flt.emplace_back(json_double(row[0]), json_double(row[1]));
  }
  return out;
}

nlohmann::json instance_json(const ScgdInstance& inst) {
  nlohmann::json slopes = nlohmann::json::array();
  for (const auto& s : inst.slopes) slopes.push_back(slope_json(s));
  return nlohmann::json{{"slopes", slopes}, {"k", inst.k}};
}

ParsedInstance parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("slopes") || !doc.contains("k"))
    throw std::invalid_argument("instance document needs \"slopes\" and \"k\"");
  if (!doc["k"].is_number_integer() || doc["k"].get<int>() < 0)
    throw std::invalid_argument("k must be a nonnegative integer");
  ParsedInstance out;
  out.k = doc["k"].get<int>();
  std::vector<Kind> kinds;
  for (const auto& s : doc["slopes"]) kinds.push_back(literal_kind(s));
  out.mode = resolve_mode(kinds);
  if (out.mode == Mode::Exact) {
    for (const auto& s : doc["slopes"])
      out.exact.push_back(s.get<std::string>() == kVertical
                              ? SlopeQ::vertical_slope()
                              : SlopeQ::from_value(json_rational(s)));
    auto sorted = make_slope_set<Rational>(out.exact);
    out.reordered = sorted.size() != out.exact.size() ||
                    !std::equal(sorted.begin(), sorted.end(), out.exact.begin(),
                                [](const auto& a, const auto& b) { return a == b; });
    out.exact = std::move(sorted);
  } else {
    for (const auto& s : doc["slopes"])
      out.flt.push_back(s.is_string() ? SlopeD::vertical_slope()
                                      : SlopeD::from_value(json_double(s)));
    auto sorted = make_slope_set<double>(out.flt);
    out.reordered = sorted.size() != out.flt.size() ||
                    !std::equal(sorted.begin(), sorted.end(), out.flt.begin(),
                                [](const auto& a, const auto& b) {
                                  return a.dx == b.dx && a.dy == b.dy;
                                });
    out.flt = std::move(sorted);
  }
  return out;
}

Graph parse_graph(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw std::invalid_argument("graph document needs \"vertices\" and \"edges\"");
  Graph g;
  g.vertices = doc["vertices"].get<int>();
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge is a two-element array");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  validate_graph(g);
  return g;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e[0], e[1]});
  return nlohmann::json{{"vertices", g.vertices}, {"edges", edges}};
}

Witness parse_witness(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("triples"))
    throw std::invalid_argument("witness document needs \"k\" and \"triples\"");
  Witness w;
  w.k = doc["k"].get<int>();
  for (const auto& t : doc["triples"]) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("each triple is [i, j, slope]");
    WitnessTriple wt;
    wt.i = t[0].get<int>();
    wt.j = t[1].get<int>();
    if (t[2].is_string()) {
      const std::string lit = t[2].get<std::string>();
      wt.s = lit == kVertical ? SlopeQ::vertical_slope()
                              : SlopeQ::from_value(parse_rational(lit));
    } else {
      // Float witnesses are verified on exact snapshots of their doubles.
      wt.s = SlopeQ::from_value(rational_from_double(json_double(t[2])));
    }
    w.triples.push_back(std::move(wt));
  }
  validate_witness(w);
  return w;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json triples = nlohmann::json::array();
  for (const auto& t : w.triples)
    triples.push_back({t.i, t.j, slope_json(t.s)});
  return nlohmann::json{{"k", w.k}, {"triples", triples}};
}

nlohmann::json labeling_json(const Labeling& lab) {
  nlohmann::json exps = nlohmann::json::array();
  for (const auto c : lab.set.exponents) exps.push_back(c);
  return nlohmann::json{{"base", lab.set.base},
                        {"exponents", exps},
                        {"points", points_json(lab.set.points)["points"]}};
}

nlohmann::json polygon_json(const AffRegPolygon& p) {
  nlohmann::json gen{{"linear",
                      {{p.generator.linear(0, 0), p.generator.linear(0, 1)},
                       {p.generator.linear(1, 0), p.generator.linear(1, 1)}}},
                     {"translation",
                      {p.generator.translation.x(), p.generator.translation.y()}}};
  return nlohmann::json{{"order", p.order},
                        {"vertices", points_json(p.vertices)["points"]},
                        {"generator", gen}};
}

nlohmann::json answer_json(const SolverAnswer& ans) {
  nlohmann::json j;
  j["verdict"] = ans.verdict == Verdict::Yes ? "YES" : "NO";
  j["no_is_conditional"] = ans.no_is_conditional;
  j["certificate"] = nullptr;
  if (ans.polygon) {
    j["certificate"] = polygon_json(*ans.polygon);
    j["certificate"]["type"] = "polygon";
  } else if (ans.exact_points) {
    j["certificate"] = points_json(*ans.exact_points);
    j["certificate"]["type"] = "points";
  } else if (ans.float_points) {
    j["certificate"] = points_json(*ans.float_points);
    j["certificate"]["type"] = "points";
  }
  j["succeeding_window"] = nullptr;
  if (ans.window)
    j["succeeding_window"] = {(*ans.window)[0], (*ans.window)[1],
                              (*ans.window)[2], (*ans.window)[3]};
  j["variant"] = ans.variant;
  j["reps_used"] = ans.reps_used;
  j["fallback"] = ans.used_fallback;
  return j;
}

std::string render_svg(const PointList<double>& pts) {
  for (const auto& p : pts)
    if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
      throw std::invalid_argument("render_svg: coordinates out of range");
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!pts.empty()) {
    min_x = max_x = pts[0].x();
    min_y = max_y = pts[0].y();
    for (const auto& p : pts) {
      min_x = std::min(min_x, p.x());
      max_x = std::max(max_x, p.x());
      min_y = std::min(min_y, p.y());
      max_y = std::max(max_y, p.y());
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad = 0.05 * span;
  const double r = 0.015 * span;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += fixed6(min_x - pad) + " " + fixed6(-(max_y + pad)) + " " +
         fixed6(max_x - min_x + 2 * pad) + " " + fixed6(max_y - min_y + 2 * pad) +
         "\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      svg += "  <line x1=\"" + fixed6(pts[i].x()) + "\" y1=\"" +
             fixed6(-pts[i].y()) + "\" x2=\"" + fixed6(pts[j].x()) + "\" y2=\"" +
             fixed6(-pts[j].y()) + "\" stroke=\"#888\" stroke-width=\"" +
             fixed6(r * 0.25) + "\"/>\n";
    }
  for (const auto& p : pts)
    svg += "  <circle cx=\"" + fixed6(p.x()) + "\" cy=\"" + fixed6(-p.y()) +
           "\" r=\"" + fixed6(r) + "\" fill=\"#1f4e8c\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace scgd
