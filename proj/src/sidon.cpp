#include "scgd/sidon.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace scgd {

namespace {

using Sums = std::vector<std::unordered_set<std::int64_t>>;

// A candidate t is admissible iff no new h-sum (one using t at least once)
// collides with an old h-sum or with another new one.  Sums using t with two
// different multiplicities always come from different multisets, and within
// one multiplicity the old terms' B_(h-m) property rules out collisions, so
// value equality is exactly multiset collision.
bool admissible(std::int64_t t, int h, const Sums& sums) {
  std::unordered_set<std::int64_t> fresh;
  for (int m = 1; m <= h; ++m) {
    const std::int64_t base = static_cast<std::int64_t>(m) * t;
    for (const std::int64_t s : sums[h - m]) {
      const std::int64_t v = base + s;
      if (sums[h].count(v)) return false;
      if (!fresh.insert(v).second) return false;
    }
  }
  return true;
}

void absorb(std::int64_t t, int h, Sums& sums) {
  for (int j = h; j >= 1; --j) {
    // sums[j-m] still holds the pre-insertion sets because j decreases.
    for (int m = 1; m <= j; ++m) {
      const std::int64_t base = static_cast<std::int64_t>(m) * t;
      for (const std::int64_t s : sums[j - m]) sums[j].insert(base + s);
    }
  }
}

}  // namespace

BhSequence greedy_bh(int h, int count) {
  if (h < 2) throw std::invalid_argument("greedy_bh: h must be at least 2");
  if (count < 1) throw std::invalid_argument("greedy_bh: count must be positive");
  BhSequence seq;
  seq.h = h;
  Sums sums(h + 1);
  sums[0].insert(0);
  std::int64_t candidate = 1;
  while (static_cast<int>(seq.terms.size()) < count) {
    while (!admissible(candidate, h, sums)) ++candidate;
    seq.terms.push_back(candidate);
    absorb(candidate, h, sums);
    ++candidate;
  }
  return seq;
}

BhCheck verify_bh(const std::vector<std::int64_t>& terms, int h) {
  if (h < 2) throw std::invalid_argument("verify_bh: h must be at least 2");
  BhCheck result;
  std::map<std::int64_t, std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> pick(h);
  // Lexicographic enumeration of index multisets i1 <= ... <= ih.
  std::vector<std::size_t> idx(h, 0);
  if (terms.empty()) return result;
  while (true) {
    std::int64_t sum = 0;
    for (int p = 0; p < h; ++p) {
      pick[p] = terms[idx[p]];
      sum += pick[p];
    }
    auto [it, inserted] = seen.emplace(sum, pick);
    if (!inserted) {
      result.ok = false;
      result.lhs = it->second;
      result.rhs = pick;
      return result;
    }
    int p = h - 1;
    while (p >= 0 && idx[p] + 1 == terms.size()) --p;
    if (p < 0) break;
    const std::size_t next = idx[p] + 1;
    for (int q = p; q < h; ++q) idx[q] = next;
  }
  return result;
}

double bh_growth_ratio(const BhSequence& seq) {
  double worst = 0;
  for (std::size_t n = 1; n <= seq.terms.size(); ++n) {
    const double envelope = std::pow(static_cast<double>(n), 2 * seq.h - 1);
    worst = std::max(worst, static_cast<double>(seq.terms[n - 1]) / envelope);
  }
  return worst;
}

}  // namespace scgd
