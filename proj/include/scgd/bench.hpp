#pragma once

// Timing harness for the scaling claims: the deterministic solver's fixed
// window count, the Monte-Carlo solver's linear per-repetition cost, and the
// reduction encoder.  Families:
//   det        random (n-4)-gon slopes plus 4 noise slopes, k = n-4
//   mc         integer slopes 0..n-1, k = (n+5)/2, two repetitions
//   reduction  clique encoding of a seeded random graph on n vertices

#include <cstdint>
#include <string>
#include <vector>

namespace scgd {

struct BenchPoint {
  int n = 0;
  double seconds = 0;
};

struct BenchResult {
  std::string family;
  std::vector<BenchPoint> points;
  double exponent = 0;  // least-squares slope of log t against log n
};

double fitted_exponent(const std::vector<BenchPoint>& pts);

// Throws on an unknown family or a size below the family's minimum.
BenchResult run_bench(const std::string& family, const std::vector<int>& sizes,
                      std::uint64_t seed = 0);

// Header line "family,n,seconds" then one row per point; the exponent goes
// into a trailing comment row.
std::string bench_csv(const BenchResult& r);

}  // namespace scgd
