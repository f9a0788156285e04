#pragma once

// Greedy B_h sequences: all sums of exactly h terms (with repetition) are
// distinct.  The greedy construction starts at 1 and accepts the smallest
// candidate that keeps the property.

#include <cstdint>
#include <vector>

namespace scgd {

struct BhSequence {
  int h = 2;
  std::vector<std::int64_t> terms;
};

// First `count` terms of the greedy B_h sequence.  h >= 2, count >= 1.
BhSequence greedy_bh(int h, int count);

struct BhCheck {
  bool ok = true;
  // On failure: two distinct h-multisets with equal sums.
  std::vector<std::int64_t> lhs, rhs;
};

// Exhaustive h-multiset sum check, independent of the greedy bookkeeping.
BhCheck verify_bh(const std::vector<std::int64_t>& terms, int h);

// max over n of terms[n-1] / n^(2h-1); the greedy sequence keeps this O(1).
double bh_growth_ratio(const BhSequence& seq);

}  // namespace scgd
