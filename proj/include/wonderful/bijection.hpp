#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "block.hpp"
#include "errors.hpp"
#include "laminar.hpp"
#include "mask.hpp"
#include "partition.hpp"

namespace wonderful {

/// One internal vertex of the labelled tree: the block it stands for, the
/// label it received, and the labels of the vertices it covers.
struct TreeVertex {
  Mask block = 0;
  int label = 0;
  int level = 0;
  Mask children = 0;
};

/// Labelled tree of s: leaves 1..n at level 0, internal vertices placed one
/// level above their highest child, ordered inside a level by minimum element
/// and labelled n+1, n+2, ... level by level. Vertices come back in label order.
inline std::vector<TreeVertex> labelled_tree(const NestedSet& s) {
  if (!s.contains_full()) throw domain_error("nested set must contain V");
  const int n = s.ambient();
  const auto& masks = s.masks();
  std::vector<TreeVertex> vs(masks.size());
  std::vector<std::size_t> by_size(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    vs[i].block = masks[i];
    by_size[i] = i;
  }
  std::sort(by_size.begin(), by_size.end(),
            [&](std::size_t a, std::size_t b) { return mask::size(masks[a]) < mask::size(masks[b]); });

  // covering parent of each block: smallest strict superset
  std::vector<std::ptrdiff_t> parent(masks.size(), -1);
  for (std::size_t oi = 0; oi < by_size.size(); ++oi)
    for (std::size_t oj = oi + 1; oj < by_size.size(); ++oj) {
      std::size_t i = by_size[oi], j = by_size[oj];
      if (mask::proper_subset(masks[i], masks[j])) {
        parent[i] = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }

  for (std::size_t oi = 0; oi < by_size.size(); ++oi) {
    std::size_t i = by_size[oi];
    int lvl = 1;
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (parent[j] == static_cast<std::ptrdiff_t>(i)) lvl = std::max(lvl, vs[j].level + 1);
    vs[i].level = lvl;
  }

  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (vs[a].level != vs[b].level) return vs[a].level < vs[b].level;
    return mask::min_element(masks[a]) < mask::min_element(masks[b]);
  });
  for (std::size_t r = 0; r < order.size(); ++r) vs[order[r]].label = n + 1 + static_cast<int>(r);

  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask covered_leaves = masks[i];
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (parent[j] == static_cast<std::ptrdiff_t>(i)) {
        covered_leaves &= ~masks[j];
        vs[i].children |= mask::bit(vs[j].label);
      }
    vs[i].children |= covered_leaves;
  }

  std::vector<TreeVertex> out(masks.size());
  for (const TreeVertex& v : vs) out[v.label - n - 1] = v;
  return out;
}

/// F^k(B(n-1)) -> partitions of {1..n+k} into k+1 blocks of size >= 2.
inline SetPartition nested_to_partition(const NestedSet& s) {
  const int m = s.ambient() + static_cast<int>(s.size()) - 1;
  std::vector<Mask> blocks;
  for (const TreeVertex& v : labelled_tree(s)) blocks.push_back(v.children);
  return SetPartition::from_masks(std::move(blocks), m);
}

/// Inverse of nested_to_partition, rebuilt level by level.
inline NestedSet partition_to_nested(const SetPartition& p, int n) {
  const int m = p.ground();
  if (n < 2) throw domain_error("n must be at least 2");
  if (static_cast<int>(p.size()) != m - n + 1)
    throw domain_error("partition of {1.." + std::to_string(m) + "} needs " + std::to_string(m - n + 1) +
                       " blocks for n = " + std::to_string(n));
  if (!p.all_blocks_at_least(2)) throw domain_error("every partition block needs at least two elements");

  std::vector<Mask> leaves(m + 2, 0);  // label -> leaf set
  std::vector<int> level(m + 2, -1);
  for (int e = 1; e <= n; ++e) {
    leaves[e] = mask::bit(e);
    level[e] = 0;
  }
  Mask labelled = mask::range(1, n);
  int next_label = n + 1;

  std::vector<Mask> pending = p.block_masks();
  std::vector<Mask> result;
  while (!pending.empty()) {
    int best = -1;
    for (Mask b : pending)
      if (mask::subset(b, labelled)) {
        int hi = 0;
        for (int c : mask::elements(b)) hi = std::max(hi, level[c]);
        if (best < 0 || hi < best) best = hi;
      }
    if (best < 0) throw internal_error("partition cannot be rebuilt into a labelled tree");

    std::vector<std::pair<Mask, Mask>> layer;  // (partition block, leaf set)
    std::vector<Mask> rest;
    for (Mask b : pending) {
      bool take = false;
      if (mask::subset(b, labelled)) {
        int hi = 0;
        for (int c : mask::elements(b)) hi = std::max(hi, level[c]);
        take = hi == best;
      }
      if (!take) {
        rest.push_back(b);
        continue;
      }
      Mask leaf = 0;
      for (int c : mask::elements(b)) leaf |= leaves[c];
      layer.emplace_back(b, leaf);
    }
    std::sort(layer.begin(), layer.end(), [](const auto& x, const auto& y) {
      return mask::min_element(x.second) < mask::min_element(y.second);
    });
    for (const auto& [b, leaf] : layer) {
      if (next_label <= kMaxElement) {
        leaves[next_label] = leaf;
        level[next_label] = best + 1;
        labelled |= mask::bit(next_label);
      }
      ++next_label;
      result.push_back(leaf);
    }
    pending = std::move(rest);
  }

  std::sort(result.begin(), result.end(), mask::canonical_less);
  if (std::adjacent_find(result.begin(), result.end()) != result.end() || !is_laminar(result) ||
      std::find(result.begin(), result.end(), mask::range(1, n)) == result.end())
    throw internal_error("rebuilt family is not an element of B(n-1)");
  NestedSet s = NestedSet::from_laminar_masks(std::move(result), n);
  if (nested_to_partition(s) != p) throw internal_error("bijection roundtrip mismatch");
  return s;
}

}  // namespace wonderful
