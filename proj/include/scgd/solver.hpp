#pragma once

// Deciders for "does some simple k-point set use only slopes from s".
// The restricted deterministic solver and the Monte-Carlo variant search for
// affinely regular polygon certificates; below k = 5 a direct constructive
// oracle takes over.

#include <array>
#include <cstdint>
#include <optional>

#include "scgd/affreg.hpp"
#include "scgd/reduction.hpp"
#include "scgd/slope.hpp"

namespace scgd {

struct SolverConfig {
  int c1 = 4;                  // regime margin: requires n <= 2k - c1
  double eps = kSlopeEps;      // slope equality tolerance
  double order_tol = kOrderTol;
  int mc_reps = 12;
  std::uint64_t seed = 0;
};

enum class Verdict { Yes, No };

struct SolverAnswer {
  Verdict verdict = Verdict::No;
  // A NO is conditional when it relies on the polygon-container conjecture;
  // the proven cases n <= k+1 (and every YES) report false.
  bool no_is_conditional = false;
  std::optional<AffRegPolygon> polygon;
  std::optional<PointList<Rational>> exact_points;
  std::optional<PointList<double>> float_points;
  // Indices into s of the slope subsequence whose query succeeded.
  std::optional<std::array<int, 4>> window;
  int variant = 0;
  int reps_used = 0;
  bool used_fallback = false;  // Monte Carlo delegated to the full scan
};

// Deterministic scan over all 4-subsequences of the first n-k+4 slopes.
// Preconditions: s sorted strictly ascending, k >= 5, n <= 2k - c1.
SolverAnswer solve_restricted(const SlopeList<double>& s, int k,
                              const SolverConfig& cfg = {});

// Repeatedly samples a random 12-slope cyclic window and scans its 4-sub-
// sequences.  YES answers are certified; a NO after all repetitions is wrong
// with probability at most (2/3)^reps on conjecture-regime YES instances.
// Falls back to solve_restricted when n < 12.
SolverAnswer solve_monte_carlo(const SlopeList<double>& s, int k,
                               const SolverConfig& cfg = {});

// Exhaustive decider for k <= 4 via labeled slope witnesses.
std::optional<Witness> brute_force_scgd(const SlopeList<Rational>& s, int k,
                                        long long budget = 10'000'000);

// Constructive answers for k <= 4 in either arithmetic mode.
SolverAnswer solve_small(const SlopeList<Rational>& s, int k,
                         const SolverConfig& cfg = {});
SolverAnswer solve_small(const SlopeList<double>& s, int k,
                         const SolverConfig& cfg = {});

}  // namespace scgd
