#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "action.hpp"
#include "block.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace wonderful {

enum class UnionRule {
  beyond_v,  // X and Y share a block other than V
  any_pair,  // every pair whose union is laminar
};

/// Adjacent transpositions (0 1), (1 2), .., (n-1 n) of S_{n+1}.
inline std::vector<ExtPermutation> adjacent_generators(int n) {
  std::vector<ExtPermutation> gens;
  for (int i = 0; i < n; ++i) gens.push_back(ExtPermutation::transposition(n, i, i + 1));
  return gens;
}

/// Least subset of B(n-1) containing `seed` and {V} that is closed under the
/// extended action and under unions of overlapping members.
inline std::vector<NestedSet> building_closure(const std::vector<NestedSet>& seed, int n,
                                               UnionRule rule = UnionRule::beyond_v) {
  const auto gens = adjacent_generators(n);
  std::unordered_set<NestedSet> seen;
  std::vector<NestedSet> members;
  std::deque<NestedSet> work;
  auto add = [&](NestedSet s) {
    if (seen.insert(s).second) {
      members.push_back(s);
      work.push_back(std::move(s));
    }
  };
  add(NestedSet::full(n));
  for (const NestedSet& s : seed) {
    if (s.ambient() != n || !s.contains_full()) throw domain_error("closure seed must lie in B(n-1)");
    add(s);
  }
  while (!work.empty()) {
    NestedSet x = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) add(act_nested(g, x));
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      const NestedSet& y = members[i];
      if (rule == UnionRule::beyond_v && intersection_masks(x, y).size() < 2) continue;
      auto u = union_masks(x, y);
      if (u.size() == x.size() || u.size() == y.size()) continue;
      if (!is_laminar(u)) continue;
      add(NestedSet::from_laminar_masks(std::move(u), n));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// phi(F^1(N'(C))): {V} together with the irreducible summands of a single
/// C-element B != V, for every such B.
inline std::vector<NestedSet> maximal_rank_one_seed(int n) {
  std::vector<NestedSet> out;
  for (const SetPartition& b : enumerate_c_elements(n)) {
    if (b.is_single_block()) continue;
    CChain c({b}, n);
    out.push_back(phi_embed(c).links().back());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wonderful
