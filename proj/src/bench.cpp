#include "scgd/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "scgd/reduction.hpp"
#include "scgd/solver.hpp"

namespace scgd {

namespace {

// Mean seconds per run, accumulating runs until the total passes 20 ms so
// fast cases still time meaningfully.
double time_run(const std::function<void()>& body) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int iters = 0;
  do {
    body();
    ++iters;
  } while (clock::now() - start < std::chrono::milliseconds(20));
  return std::chrono::duration<double>(clock::now() - start).count() / iters;
}

SlopeList<double> det_family_set(int n, std::mt19937_64& rng) {
  const int d = n - 4;
  const auto poly = random_affreg_polygon(d, rng);
  // The d polygon slopes come from the profile, not from all vertex pairs,
  // so set construction stays near linear in d.
  SlopeList<double> raw = make_slope_set<double>(slope_profile(poly).s);
  std::uniform_real_distribution<double> noise(-8.0, 8.0);
  while (static_cast<int>(raw.size()) < n) {
    raw.push_back(SlopeD::from_value(noise(rng)));
    raw = make_slope_set<double>(std::move(raw));
  }
  return raw;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g;
  g.vertices = n;
  std::bernoulli_distribution edge(0.5);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.edges.push_back({u, v});
  return g;
}

}  // namespace

double fitted_exponent(const std::vector<BenchPoint>& pts) {
  if (pts.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(std::max(p.seconds, 1e-12));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchResult run_bench(const std::string& family, const std::vector<int>& sizes,
                      std::uint64_t seed) {
  BenchResult res;
  res.family = family;
  std::mt19937_64 rng(seed);
  for (const int n : sizes) {
    BenchPoint pt;
    pt.n = n;
    if (family == "det") {
      if (n < 12) throw std::invalid_argument("det family needs n >= 12");
      const auto s = det_family_set(n, rng);
      SolverConfig cfg;
      pt.seconds = time_run([&] { (void)solve_restricted(s, n - 4, cfg); });
    } else if (family == "mc") {
      if (n < 12) throw std::invalid_argument("mc family needs n >= 12");
      SlopeList<double> s;
      for (int i = 0; i < n; ++i) s.push_back(SlopeD::from_value(i));
      SolverConfig cfg;
      cfg.mc_reps = 2;
      cfg.seed = seed;
      pt.seconds = time_run([&] { (void)solve_monte_carlo(s, (n + 5) / 2, cfg); });
    } else if (family == "reduction") {
      if (n < 5) throw std::invalid_argument("reduction family needs n >= 5");
      const Graph g = random_graph(n, rng);
      pt.seconds = time_run([&] { (void)encode_clique(g, 5); });
    } else {
      throw std::invalid_argument("unknown bench family: " + family);
    }
    res.points.push_back(pt);
  }
  res.exponent = fitted_exponent(res.points);
  return res;
}

std::string bench_csv(const BenchResult& r) {
  std::ostringstream out;
  out << "family,n,seconds\n";
  for (const auto& p : r.points)
    out << r.family << ',' << p.n << ',' << p.seconds << '\n';
  out << "# fitted exponent " << r.exponent << '\n';
  return out.str();
}

}  // namespace scgd
