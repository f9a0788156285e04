#include "scgd/symbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scgd {

namespace {

std::array<LinearForm, 3> lhs_factors() {
  return {z_diff(3, 5), z_diff(6, 2), z_diff(4, 1)};
}

std::array<LinearForm, 3> rhs_factors() {
  return {z_diff(2, 4), z_diff(5, 1), z_diff(6, 3)};
}

Partition canonical_partition(const std::array<int, 12>& root_of) {
  std::map<int, std::vector<int>> classes;
  for (int v = 1; v <= 12; ++v) classes[root_of[v - 1]].push_back(v);
  Partition p;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    p.push_back(members);
  }
  std::sort(p.begin(), p.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

struct MergeState {
  std::array<int, 12> parent;

  MergeState() { std::iota(parent.begin(), parent.end(), 1); }

  int find(int v) {
    while (parent[v - 1] != v) v = parent[v - 1];
    return v;
  }

  void unite(int a, int b) { parent[find(a) - 1] = find(b); }
};

void recurse(std::vector<LinearForm> eqs, std::vector<LinearForm> ineqs,
             MergeState state, int pivot_rule, CaseSolutions& out) {
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(),
                           [](const LinearForm& f) { return f.zero(); }),
            eqs.end());
  if (eqs.empty()) {
    ++out.paths;
    const Partition p = canonical_partition([&] {
      std::array<int, 12> roots{};
      for (int v = 1; v <= 12; ++v) roots[v - 1] = state.find(v);
      return roots;
    }());
    if (std::find(out.partitions.begin(), out.partitions.end(), p) ==
        out.partitions.end())
      out.partitions.push_back(p);
    return;
  }

  const LinearForm& first = eqs.front();
  int old_var = 0;
  if (pivot_rule == 0) {
    for (int v = 1; v <= 12 && !old_var; ++v)
      if (first.c[v - 1] > 0) old_var = v;
  } else {
    for (int v = 12; v >= 1 && !old_var; --v)
      if (first.c[v - 1] > 0) old_var = v;
  }
  if (!old_var) return;  // no positive term: this branch has no merges left

  for (int new_var = 1; new_var <= 12; ++new_var) {
    if (first.c[new_var - 1] >= 0) continue;
    std::vector<LinearForm> next_ineqs = ineqs;
    bool violated = false;
    for (auto& f : next_ineqs) {
      f.substitute(old_var, new_var);
      if (f.zero()) {
        violated = true;
        break;
      }
    }
    if (violated) continue;
    std::vector<LinearForm> next_eqs = eqs;
    for (auto& f : next_eqs) f.substitute(old_var, new_var);
    MergeState next_state = state;
    next_state.unite(old_var, new_var);
    recurse(std::move(next_eqs), std::move(next_ineqs), next_state, pivot_rule,
            out);
  }
}

// Cubic polynomials as monomial maps over sorted variable index triples.
using Cubic = std::map<std::array<int, 3>, long long>;

Cubic expand_product(const std::array<LinearForm, 3>& factors,
                     const std::array<int, 12>& rep_of) {
  Cubic result;
  for (int a = 0; a < 12; ++a) {
    if (factors[0].c[a] == 0) continue;
    for (int b = 0; b < 12; ++b) {
      if (factors[1].c[b] == 0) continue;
      for (int c = 0; c < 12; ++c) {
        if (factors[2].c[c] == 0) continue;
        std::array<int, 3> mono = {rep_of[a], rep_of[b], rep_of[c]};
        std::sort(mono.begin(), mono.end());
        const long long coeff = static_cast<long long>(factors[0].c[a]) *
                                factors[1].c[b] * factors[2].c[c];
        result[mono] += coeff;
        if (result[mono] == 0) result.erase(mono);
      }
    }
  }
  return result;
}

}  // namespace

LinearForm z_pair(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("z_pair: index in 1..6");
  LinearForm f;
  f.c[2 * i - 2] = 1;
  f.c[2 * i - 1] = 1;
  return f;
}

LinearForm z_diff(int i, int j) { return z_pair(i) - z_pair(j); }

std::vector<CaseDescriptor> enumerate_cases() {
  std::vector<CaseDescriptor> cases;
  const auto lhs = lhs_factors();
  const auto rhs = rhs_factors();
  std::vector<std::array<int, 3>> sign_triples;
  for (const int s1 : {+1, -1})
    for (const int s2 : {+1, -1})
      for (const int s3 : {+1, -1})
        if (s1 * s2 * s3 == 1) sign_triples.push_back({s1, s2, s3});
  std::array<int, 3> perm = {0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  int index = 0;
  for (const auto& signs : sign_triples)
    for (const auto& p : perms) {
      CaseDescriptor cd;
      cd.index = ++index;
      cd.signs = signs;
      cd.perm = p;
      for (int f = 0; f < 3; ++f)
        cd.equations.push_back(lhs[f] - signs[f] * rhs[p[f]]);
      cases.push_back(std::move(cd));
    }
  return cases;
}

std::vector<LinearForm> standard_inequations() {
  std::vector<LinearForm> ineqs;
  for (int i = 1; i <= 6; ++i) {
    LinearForm f;
    f.c[2 * i - 2] = 1;
    f.c[2 * i - 1] = -1;
    ineqs.push_back(f);
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j < i; ++j)
      if (i + j != 7) ineqs.push_back(z_diff(i, j));
  return ineqs;
}

CaseSolutions solve_case(const std::vector<LinearForm>& equations,
                         const std::vector<LinearForm>& inequations,
                         int pivot_rule) {
  for (const auto& f : inequations)
    if (f.zero())
      throw std::invalid_argument("inequation is identically zero");
  CaseSolutions out;
  recurse(equations, inequations, MergeState(), pivot_rule, out);
  std::sort(out.partitions.begin(), out.partitions.end());
  return out;
}

bool partition_gives_identity(const Partition& p) {
  std::array<int, 12> rep_of{};
  for (const auto& cls : p)
    for (const int v : cls) rep_of[v - 1] = cls.front();
  for (int v = 0; v < 12; ++v)
    if (rep_of[v] == 0) throw std::invalid_argument("partition must cover X1..X12");
  return expand_product(lhs_factors(), rep_of) ==
         expand_product(rhs_factors(), rep_of);
}

AnalysisReport run_full_analysis(int pivot_rule) {
  AnalysisReport report;
  const auto ineqs = standard_inequations();
  std::vector<Partition> all;
  for (const auto& cd : enumerate_cases()) {
    const CaseSolutions sol = solve_case(cd.equations, ineqs, pivot_rule);
    AnalysisReport::PerCase pc;
    pc.descriptor = cd;
    pc.solutions = static_cast<int>(sol.partitions.size());
    report.cases.push_back(std::move(pc));
    if (!sol.partitions.empty()) ++report.solvable_cases;
    report.total_solutions += static_cast<long long>(sol.partitions.size());
    all.insert(all.end(), sol.partitions.begin(), sol.partitions.end());
  }

  // Orbits under the 64 subsets of in-pair swaps.
  std::set<Partition> reps;
  for (const auto& p : all) {
    Partition best = p;
    for (int mask = 0; mask < 64; ++mask) {
      std::array<int, 12> image{};
      for (int v = 1; v <= 12; ++v) {
        const int pair = (v + 1) / 2;
        const bool swap = (mask >> (pair - 1)) & 1;
        const int target = swap ? (v % 2 == 1 ? v + 1 : v - 1) : v;
        image[v - 1] = target;
      }
      Partition q;
      for (const auto& cls : p) {
        std::vector<int> mapped;
        for (const int v : cls) mapped.push_back(image[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        q.push_back(std::move(mapped));
      }
      std::sort(q.begin(), q.end(), [](const auto& a, const auto& b) {
        return a.front() < b.front();
      });
      best = std::min(best, q);
    }
    reps.insert(best);
  }
  report.orbit_count = static_cast<int>(reps.size());
  report.orbit_representatives.assign(reps.begin(), reps.end());
  return report;
}

}  // namespace scgd
