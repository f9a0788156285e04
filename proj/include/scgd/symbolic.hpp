#pragma once

// Symbolic matching of the two factorizations of the cubic slope relation.
// Variables X1..X12 come in pairs Z_i = X_(2i-1) + X_(2i); each case equates
// the factor lists (Z3-Z5, Z6-Z2, Z4-Z1) and (Z2-Z4, Z5-Z1, Z6-Z3) up to a
// sign pattern with product +1 and a permutation, and is solved by merging
// variables subject to distinctness side conditions.

#include <array>
#include <cstdint>
#include <vector>

namespace scgd {

// Integer-coefficient linear form over X1..X12; c[i] multiplies X_(i+1).
struct LinearForm {
  std::array<int, 12> c{};

  bool zero() const {
    for (const int v : c)
      if (v != 0) return false;
    return true;
  }

  // X_old := X_new everywhere.
  void substitute(int old_var, int new_var) {
    c[new_var - 1] += c[old_var - 1];
    c[old_var - 1] = 0;
  }

  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    LinearForm r;
    for (int i = 0; i < 12; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }

  friend LinearForm operator*(int s, const LinearForm& a) {
    LinearForm r;
    for (int i = 0; i < 12; ++i) r.c[i] = s * a.c[i];
    return r;
  }
};

LinearForm z_pair(int i);         // Z_i
LinearForm z_diff(int i, int j);  // Z_i - Z_j

struct CaseDescriptor {
  int index = 0;                 // 1-based enumeration position
  std::array<int, 3> signs{};    // entries +-1, product +1
  std::array<int, 3> perm{};     // RHS factor order
  std::vector<LinearForm> equations;
};

// The 24 cases: 4 admissible sign triples (product order) crossed with the 6
// factor permutations (lexicographic), signs varying slowest.
std::vector<CaseDescriptor> enumerate_cases();

// Distinctness side conditions: X_(2i-1) - X_(2i) for i = 1..6, and
// Z_i - Z_j for the twelve index pairs with i + j != 7.
std::vector<LinearForm> standard_inequations();

// A solution merges variables; recorded as the partition of X1..X12 into
// classes, classes sorted by smallest member.
using Partition = std::vector<std::vector<int>>;

struct CaseSolutions {
  std::vector<Partition> partitions;  // distinct canonical partitions
  long long paths = 0;                // raw substitution chains found
};

// Recursive merge solver.  pivot_rule 0 picks the lowest-index positive
// variable of the first equation, 1 the highest; solutions must agree.
CaseSolutions solve_case(const std::vector<LinearForm>& equations,
                         const std::vector<LinearForm>& inequations,
                         int pivot_rule = 0);

// True when replacing each variable by its class representative turns the
// two factor products into literally identical polynomials.
bool partition_gives_identity(const Partition& p);

struct AnalysisReport {
  struct PerCase {
    CaseDescriptor descriptor;
    int solutions = 0;
  };
  std::vector<PerCase> cases;
  int solvable_cases = 0;
  long long total_solutions = 0;
  // Orbits of all solution partitions under the 64 in-pair swap relabelings
  // X_(2i-1) <-> X_(2i).
  int orbit_count = 0;
  std::vector<Partition> orbit_representatives;
};

AnalysisReport run_full_analysis(int pivot_rule = 0);

}  // namespace scgd
