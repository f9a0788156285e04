// Command line front end.  Subcommands cover the generators, checkers and
// solvers of the library; documents are JSON on stdin/stdout or files.
// Exit codes: 0 = yes/success, 1 = no/false, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "scgd/bench.hpp"
#include "scgd/generic_sets.hpp"
#include "scgd/io.hpp"
#include "scgd/sidon.hpp"
#include "scgd/symbolic.hpp"

namespace {

using nlohmann::json;
using namespace scgd;

json read_json(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

void write_doc(const json& doc, const std::string& path) {
  write_text(doc.dump(2), path);
}

SlopeD to_float(const SlopeQ& s) {
  if (s.vertical()) return SlopeD::vertical_slope();
  return SlopeD::from_delta(static_cast<double>(Rational(s.dx)),
                            static_cast<double>(Rational(s.dy)));
}

SlopeList<double> to_float(const SlopeList<Rational>& s) {
  SlopeList<double> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(to_float(x));
  return out;
}

PointList<double> to_float(const PointList<Rational>& pts) {
  PointList<double> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    out.emplace_back(static_cast<double>(p.x()), static_cast<double>(p.y()));
  return out;
}

void warn_reordered(const ParsedInstance& inst) {
  if (inst.reordered)
    std::cerr << "warning: input slopes were not a sorted distinct set; "
                 "sorted and deduplicated\n";
}

json partition_json(const Partition& p) {
  json out = json::array();
  for (const auto& cls : p) out.push_back(cls);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slope-constrained drawings of complete graphs"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-";
  std::string instance_path, witness_path;
  double eps = kSlopeEps;
  double order_tol = kOrderTol;
  int c1 = 4;
  int reps = 12;
  std::uint64_t seed = 0;
  int rc = 0;

  auto add_io = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("-i,--input", in_path, "input document, - for stdin");
    sub->add_option("-o,--output", out_path, "output path, - for stdout");
  };

  // sidon
  int bh_h = 3, bh_count = 10;
  bool bh_verify = false;
  auto* sidon = app.add_subcommand("sidon", "greedy B_h sequence");
  sidon->add_option("--h", bh_h, "sum length h")->default_val(3);
  sidon->add_option("--count", bh_count, "number of terms")->default_val(10);
  sidon->add_flag("--verify", bh_verify, "re-check by exhaustive sums");
  add_io(sidon, false);
  sidon->callback([&] {
    const BhSequence seq = greedy_bh(bh_h, bh_count);
    json out{{"h", seq.h}, {"terms", seq.terms},
             {"growth_ratio", bh_growth_ratio(seq)}};
    if (bh_verify) {
      const BhCheck chk = verify_bh(seq.terms, seq.h);
      out["verified"] = chk.ok;
      if (!chk.ok) rc = 1;
    }
    write_doc(out, out_path);
  });

  // generic
  int gen_count = 6;
  std::int64_t gen_base = 50;
  bool gen_check = false;
  auto* generic = app.add_subcommand("generic", "slope-generic point set");
  generic->add_option("--count", gen_count, "number of points")->default_val(6);
  generic->add_option("--base", gen_base, "power base")->default_val(50);
  generic->add_flag("--check", gen_check, "run the exhaustive genericity check");
  add_io(generic, false);
  generic->callback([&] {
    if (gen_base != 50)
      std::cerr << "warning: genericity is only established for base 50; "
                   "other bases are best effort\n";
    Labeling lab{build_generic(gen_count, gen_base)};
    json out = labeling_json(lab);
    if (gen_check) {
      const GenericCheck chk = check_slope_generic(lab.set.points);
      out["generic"] = chk.ok;
      out["classes"] = chk.realized.size();
      int direct = 0, complement = 0, other = 0;
      for (const auto& r : chk.realized) {
        switch (classify_parabola_case(lab.set, r.slopes)) {
          case 1: ++direct; break;
          case 2: ++complement; break;
          default: ++other; break;
        }
      }
      out["case_counts"] = {{"direct", direct},
                           {"complement", complement},
                           {"other", other}};
      if (!chk.ok) {
        out["counterexample"] = points_json(to_list(*chk.counterexample));
        rc = 1;
      }
    }
    write_doc(out, out_path);
  });

  // check-generic
  auto* check_generic =
      app.add_subcommand("check-generic", "exhaustive genericity check");
  add_io(check_generic);
  check_generic->callback([&] {
    const ParsedPoints pts = parse_points(read_json(in_path));
    if (pts.mode != Mode::Exact)
      throw std::invalid_argument("check-generic needs exact coordinates");
    const GenericCheck chk = check_slope_generic(pts.exact);
    json out{{"generic", chk.ok}, {"classes", chk.realized.size()}};
    if (!chk.ok) {
      out["counterexample"] = points_json(to_list(*chk.counterexample));
      rc = 1;
    }
    write_doc(out, out_path);
  });

  // reduce
  int red_k = 5;
  bool red_half = false;
  std::string red_witness_out;
  auto* reduce = app.add_subcommand("reduce", "encode a clique question");
  reduce->add_option("--k", red_k, "clique size")->default_val(5);
  reduce->add_flag("--half-clique", red_half, "override k to ceil(|V|/2)");
  reduce->add_option("--witness-out", red_witness_out,
                     "when a k-clique exists, write its witness here");
  add_io(reduce);
  reduce->callback([&] {
    const Graph g = parse_graph(read_json(in_path));
    const Reduction red = encode_clique(g, red_k, red_half);
    json out{{"instance", instance_json(red.instance)},
             {"labeling", labeling_json(red.labeling)}};
    write_doc(out, out_path);
    if (!red_witness_out.empty()) {
      const auto clique = find_clique(g, red.instance.k);
      if (!clique) {
        std::cerr << "no clique of size " << red.instance.k << '\n';
        rc = 1;
        return;
      }
      write_doc(witness_json(witness_from_clique(*clique, red.labeling)),
                red_witness_out);
    }
  });

  // clique
  int clique_k = 5;
  auto* clique = app.add_subcommand("clique", "brute-force clique search");
  clique->add_option("--k", clique_k, "clique size")->default_val(5);
  add_io(clique);
  clique->callback([&] {
    const Graph g = parse_graph(read_json(in_path));
    const auto found = find_clique(g, clique_k);
    json out{{"found", found.has_value()}};
    if (found)
      out["vertices"] = *found;
    else
      rc = 1;
    write_doc(out, out_path);
  });

  // check-witness
  auto* check_witness =
      app.add_subcommand("check-witness", "verify a labeled slope witness");
  check_witness->add_option("--instance", instance_path, "instance document")
      ->required();
  check_witness->add_option("--witness", witness_path, "witness document")
      ->required();
  add_io(check_witness, false);
  check_witness->callback([&] {
    const ParsedInstance pi = parse_instance(read_json(instance_path));
    if (pi.mode != Mode::Exact)
      throw std::invalid_argument("check-witness needs an exact instance");
    warn_reordered(pi);
    const Witness w = parse_witness(read_json(witness_path));
    const WitnessReport rep = verify_witness({pi.exact, pi.k}, w);
    json out{{"ok", rep.ok}};
    if (!rep.ok) {
      out["reason"] = rep.reason;
      rc = 1;
    } else {
      out["points"] = points_json(rep.points)["points"];
    }
    write_doc(out, out_path);
  });

  // solve / solve-mc
  auto run_solver = [&](bool monte_carlo) {
    const ParsedInstance pi = parse_instance(read_json(in_path));
    warn_reordered(pi);
    SolverConfig cfg;
    cfg.c1 = c1;
    cfg.eps = eps;
    cfg.order_tol = order_tol;
    cfg.mc_reps = reps;
    cfg.seed = seed;
    SolverAnswer ans;
    if (pi.k <= 4) {
      ans = pi.mode == Mode::Exact ? solve_small(pi.exact, pi.k, cfg)
                                   : solve_small(pi.flt, pi.k, cfg);
    } else {
      const SlopeList<double> s =
          pi.mode == Mode::Exact ? to_float(pi.exact) : pi.flt;
      ans = monte_carlo ? solve_monte_carlo(s, pi.k, cfg)
                        : solve_restricted(s, pi.k, cfg);
    }
    write_doc(answer_json(ans), out_path);
    rc = ans.verdict == Verdict::Yes ? 0 : 1;
  };
  auto* solve = app.add_subcommand("solve", "deterministic restricted solver");
  solve->add_option("--eps", eps, "slope tolerance");
  solve->add_option("--c1", c1, "regime margin");
  solve->add_option("--order-tol", order_tol, "identity tolerance");
  add_io(solve);
  solve->callback([&] { run_solver(false); });

  auto* solve_mc = app.add_subcommand("solve-mc", "Monte-Carlo solver");
  solve_mc->add_option("--eps", eps, "slope tolerance");
  solve_mc->add_option("--c1", c1, "regime margin");
  solve_mc->add_option("--order-tol", order_tol, "identity tolerance");
  solve_mc->add_option("--reps", reps, "window repetitions");
  solve_mc->add_option("--seed", seed, "random seed");
  add_io(solve_mc);
  solve_mc->callback([&] { run_solver(true); });

  // oracle
  long long oracle_budget = 10'000'000;
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive witness search for up to four points");
  oracle->add_option("--budget", oracle_budget, "search node budget");
  add_io(oracle);
  oracle->callback([&] {
    const ParsedInstance pi = parse_instance(read_json(in_path));
    if (pi.mode != Mode::Exact)
      throw std::invalid_argument("oracle needs an exact instance");
    warn_reordered(pi);
    const auto w = brute_force_scgd(pi.exact, pi.k, oracle_budget);
    if (w) {
      write_doc(witness_json(*w), out_path);
    } else {
      write_doc(json{{"verdict", "NO"}}, out_path);
      rc = 1;
    }
  });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "dual quadruple");
  add_io(dual_cmd);
  dual_cmd->callback([&] {
    const ParsedPoints pts = parse_points(read_json(in_path));
    const bool exact = pts.mode == Mode::Exact;
    const std::size_t n = exact ? pts.exact.size() : pts.flt.size();
    if (n != 4) throw std::invalid_argument("dual needs exactly four points");
    json out;
    auto emit = [&out](const auto& quad) {
      out["points"] = points_json(to_list(quad))["points"];
      const auto m = slope_sextuple(quad);
      json sx = json::array();
      bool finite = true;
      for (const auto& s : m) {
        sx.push_back(slope_json(s));
        finite &= !s.vertical();
      }
      out["sextuple"] = sx;
      if (finite) {
        using Scalar = std::decay_t<decltype(quad[0].x())>;
        std::array<Scalar, 6> z;
        for (int p = 0; p < 6; ++p) z[p] = m[p].value();
        const Scalar q = q_poly(z);
        if constexpr (std::is_same_v<Scalar, double>)
          out["q"] = q;
        else
          out["q"] = rational_json(q);
      }
    };
    if (exact)
      emit(dual(QuadQ{pts.exact[0], pts.exact[1], pts.exact[2], pts.exact[3]}));
    else
      emit(dual(QuadD{pts.flt[0], pts.flt[1], pts.flt[2], pts.flt[3]}));
    write_doc(out, out_path);
  });

  // affreg
  int affreg_n = 5;
  bool affreg_random = false;
  auto* affreg = app.add_subcommand("affreg", "affinely regular polygon");
  affreg->add_option("--n", affreg_n, "vertex count")->default_val(5);
  affreg->add_flag("--random", affreg_random, "random affine image");
  affreg->add_option("--seed", seed, "random seed");
  add_io(affreg, false);
  affreg->callback([&] {
    AffRegPolygon poly;
    if (affreg_random) {
      std::mt19937_64 rng(seed);
      poly = random_affreg_polygon(affreg_n, rng);
    } else {
      poly = regular_ngon(affreg_n);
    }
    json out = polygon_json(poly);
    const PolygonSlopeProfile prof = slope_profile(poly);
    out["cyclic_order_ok"] = profile_cyclic_order_ok(prof);
    out["boundary_ok"] = profile_boundary_ok(prof);
    write_doc(out, out_path);
  });

  // four-slopes
  int fs_k = 5;
  std::vector<int> fs_window;
  auto* four_slopes = app.add_subcommand(
      "four-slopes", "polygon query from four slopes of an instance");
  four_slopes->add_option("--k", fs_k, "minimum polygon order")->default_val(5);
  four_slopes
      ->add_option("--window", fs_window,
                   "four indices into the sorted slope set")
      ->expected(4)
      ->required();
  four_slopes->add_option("--eps", eps, "slope tolerance");
  four_slopes->add_option("--order-tol", order_tol, "identity tolerance");
  add_io(four_slopes);
  four_slopes->callback([&] {
    const ParsedInstance pi = parse_instance(read_json(in_path));
    warn_reordered(pi);
    const SlopeList<double> s =
        pi.mode == Mode::Exact ? to_float(pi.exact) : pi.flt;
    std::array<SlopeD, 4> t;
    for (int a = 0; a < 4; ++a) {
      const int idx = fs_window[a];
      if (idx < 0 || idx >= static_cast<int>(s.size()))
        throw std::invalid_argument("window index out of range");
      t[a] = s[idx];
    }
    const auto res = four_slopes_query(s, fs_k, t, eps, order_tol);
    json out{{"found", res.has_value()}};
    if (res) {
      out["polygon"] = polygon_json(res->polygon);
      out["variant"] = res->variant;
    } else {
      rc = 1;
    }
    write_doc(out, out_path);
  });

  // cases
  int pivot_rule = 0;
  bool cases_full = false;
  auto* cases = app.add_subcommand(
      "cases", "symbolic analysis of the factor-matching cases");
  cases->add_option("--pivot", pivot_rule, "pivot rule 0 or 1")->default_val(0);
  cases->add_flag("--partitions", cases_full, "include every solution partition");
  add_io(cases, false);
  cases->callback([&] {
    const AnalysisReport rep = run_full_analysis(pivot_rule);
    json out;
    json per_case = json::array();
    for (const auto& c : rep.cases) {
      per_case.push_back({{"index", c.descriptor.index},
                          {"signs", c.descriptor.signs},
                          {"perm", c.descriptor.perm},
                          {"solutions", c.solutions}});
    }
    out["cases"] = per_case;
    out["solvable_cases"] = rep.solvable_cases;
    out["total_solutions"] = rep.total_solutions;
    out["orbit_count"] = rep.orbit_count;
    json reps_json = json::array();
    for (const auto& p : rep.orbit_representatives)
      reps_json.push_back(partition_json(p));
    out["orbit_representatives"] = reps_json;
    if (cases_full) {
      json parts = json::array();
      for (const auto& c : rep.cases) {
        if (c.solutions == 0) continue;
        const CaseSolutions sols =
            solve_case(c.descriptor.equations, standard_inequations(), pivot_rule);
        json entry{{"index", c.descriptor.index}, {"partitions", json::array()}};
        for (const auto& p : sols.partitions)
          entry["partitions"].push_back(partition_json(p));
        parts.push_back(entry);
      }
      out["partitions"] = parts;
    }
    write_doc(out, out_path);
  });

  // render
  auto* render = app.add_subcommand("render", "SVG of a point set");
  add_io(render);
  render->callback([&] {
    const ParsedPoints pts = parse_points(read_json(in_path));
    const PointList<double> flt =
        pts.mode == Mode::Exact ? to_float(pts.exact) : pts.flt;
    for (const auto& p : flt)
      if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
        throw std::invalid_argument("coordinates overflow double range");
    write_text(render_svg(flt), out_path);
  });

  // bench
  std::string bench_family = "det";
  std::vector<int> bench_sizes;
  auto* bench = app.add_subcommand("bench", "timing families");
  bench->add_option("--family", bench_family, "det, mc or reduction")
      ->default_val("det");
  bench->add_option("--sizes", bench_sizes, "instance sizes")->required();
  bench->add_option("--seed", seed, "random seed");
  add_io(bench, false);
  bench->callback([&] {
    write_text(bench_csv(run_bench(bench_family, bench_sizes, seed)), out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
