#include "scgd/solver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace scgd {

namespace {

template <class S>
void require_sorted_set(const SlopeList<S>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i - 1] < s[i]))
      throw std::invalid_argument("slope set must be sorted and distinct");
}

void require_regime(int n, int k, const SolverConfig& cfg) {
  if (k < 5)
    throw std::invalid_argument("k < 5: use solve_small");
  if (n > 2 * k - cfg.c1)
    throw std::invalid_argument(
        "instance outside the restricted regime n <= 2k - c1");
}

bool unconditional_no(int n, int k) { return n <= k + 1; }

// Lexicographic scan of the 4-subsequences of `window` (indices into s).
std::optional<SolverAnswer> scan_window(const SlopeList<double>& s, int k,
                                        const std::vector<int>& window,
                                        const SolverConfig& cfg) {
  const int w = static_cast<int>(window.size());
  std::array<SlopeD, 4> t;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b)
      for (int c = b + 1; c < w; ++c)
        for (int d = c + 1; d < w; ++d) {
          t = {s[window[a]], s[window[b]], s[window[c]], s[window[d]]};
          const auto hit = four_slopes_query(s, k, t, cfg.eps, cfg.order_tol);
          if (hit) {
            SolverAnswer ans;
            ans.verdict = Verdict::Yes;
            ans.polygon = hit->polygon;
            ans.variant = hit->variant;
            ans.window = {window[a], window[b], window[c], window[d]};
            return ans;
          }
        }
  return std::nullopt;
}

template <class S>
SolverAnswer solve_small_impl(const SlopeList<S>& s, int k,
                              const SolverConfig& cfg) {
  require_sorted_set<S>(s);
  if (k > 4) throw std::invalid_argument("solve_small handles k <= 4 only");
  const int n = static_cast<int>(s.size());
  SolverAnswer ans;
  auto set_points = [&](PointList<S> pts) {
    if constexpr (float_mode<S>)
      ans.float_points = std::move(pts);
    else
      ans.exact_points = std::move(pts);
  };

  if (k <= 1) {
    ans.verdict = Verdict::Yes;
    set_points({Point<S>(S(0), S(0))});
    return ans;
  }
  if (k == 2) {
    if (n < 1) return ans;  // NO, unconditional
    ans.verdict = Verdict::Yes;
    set_points({Point<S>(S(0), S(0)), Point<S>(S(s[0].dx), S(s[0].dy))});
    return ans;
  }
  if (k == 3) {
    if (n < 3) return ans;
    const Point<S> p0(S(0), S(0));
    const Point<S> p1(S(s[0].dx), S(s[0].dy));
    const auto p2 = line_intersect<S>(p0, Vec2<S>(S(s[1].dx), S(s[1].dy)), p1,
                                      Vec2<S>(S(s[2].dx), S(s[2].dy)), cfg.eps);
    if (!p2) return ans;
    ans.verdict = Verdict::Yes;
    set_points({p0, p1, *p2});
    return ans;
  }

  // k == 4: labeled-witness brute force over exact snapshots of the slopes.
  // Float slopes snapshot through value(): the double division cancels the
  // unit-vector normalization, so typical inputs keep their intended value.
  SlopeList<Rational> exact;
  exact.reserve(s.size());
  for (const auto& sl : s) {
    if constexpr (float_mode<S>)
      exact.push_back(sl.vertical()
                          ? SlopeQ::vertical_slope()
                          : SlopeQ::from_value(rational_from_double(sl.value())));
    else
      exact.push_back(sl);
  }
  exact = make_slope_set<Rational>(std::move(exact));
  const auto witness = brute_force_scgd(exact, 4);
  if (!witness) return ans;
  auto pts = solve_from_witness(*witness);
  if (!pts) return ans;  // cannot happen for a returned witness
  ans.verdict = Verdict::Yes;
  if constexpr (float_mode<S>) {
    PointList<double> fl;
    for (const auto& p : *pts)
      fl.emplace_back(static_cast<double>(p.x()), static_cast<double>(p.y()));
    ans.float_points = std::move(fl);
  } else {
    ans.exact_points = std::move(*pts);
  }
  return ans;
}

}  // namespace

SolverAnswer solve_restricted(const SlopeList<double>& s, int k,
                              const SolverConfig& cfg) {
  require_sorted_set<double>(s);
  const int n = static_cast<int>(s.size());
  require_regime(n, k, cfg);
  SolverAnswer ans;
  if (n < k) {
    ans.no_is_conditional = false;
    return ans;
  }
  const int r = n - k;
  std::vector<int> window(r + 4);
  for (int i = 0; i < r + 4; ++i) window[i] = i;
  if (auto hit = scan_window(s, k, window, cfg)) return *hit;
  ans.no_is_conditional = !unconditional_no(n, k);
  return ans;
}

SolverAnswer solve_monte_carlo(const SlopeList<double>& s, int k,
                               const SolverConfig& cfg) {
  require_sorted_set<double>(s);
  const int n = static_cast<int>(s.size());
  require_regime(n, k, cfg);
  if (n < 12) {
    SolverAnswer ans = solve_restricted(s, k, cfg);
    ans.used_fallback = true;
    return ans;
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> start(0, n - 1);
  std::vector<int> window(12);
  for (int rep = 1; rep <= cfg.mc_reps; ++rep) {
    const int t1 = start(rng);
    // Subsequences are taken in cyclic window order, which may wrap.
    for (int i = 0; i < 12; ++i) window[i] = (t1 + i) % n;
    if (auto hit = scan_window(s, k, window, cfg)) {
      hit->reps_used = rep;
      return *hit;
    }
  }
  SolverAnswer ans;
  ans.reps_used = cfg.mc_reps;
  ans.no_is_conditional = !unconditional_no(n, k);
  return ans;
}

std::optional<Witness> brute_force_scgd(const SlopeList<Rational>& s, int k,
                                        long long budget) {
  require_sorted_set<Rational>(s);
  if (k < 2) throw std::invalid_argument("brute_force_scgd: k must be >= 2");
  const int n = static_cast<int>(s.size());
  if (n == 0) return std::nullopt;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  std::vector<int> assign(m, -1);
  long long visited = 0;

  auto shares_index = [&](int a, int b) {
    return pairs[a].first == pairs[b].first || pairs[a].first == pairs[b].second ||
           pairs[a].second == pairs[b].first || pairs[a].second == pairs[b].second;
  };

  std::optional<Witness> found;
  auto dfs = [&](auto&& self, int pos) -> bool {
    if (++visited > budget)
      throw std::runtime_error("brute_force_scgd: search budget exhausted");
    if (pos == m) {
      Witness w;
      w.k = k;
      for (int p = 0; p < m; ++p)
        w.triples.push_back({pairs[p].first, pairs[p].second, s[assign[p]]});
      if (solve_from_witness(w)) {
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (int q = 0; q < pos; ++q)
        if (assign[q] == c && shares_index(pos, q)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assign[pos] = c;
      if (self(self, pos + 1)) return true;
    }
    assign[pos] = -1;
    return false;
  };
  dfs(dfs, 0);
  return found;
}

SolverAnswer solve_small(const SlopeList<Rational>& s, int k,
                         const SolverConfig& cfg) {
  return solve_small_impl<Rational>(s, k, cfg);
}

SolverAnswer solve_small(const SlopeList<double>& s, int k,
                         const SolverConfig& cfg) {
  return solve_small_impl<double>(s, k, cfg);
}

}  // namespace scgd
