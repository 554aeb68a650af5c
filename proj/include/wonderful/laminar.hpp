#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "block.hpp"
#include "cliques.hpp"
#include "errors.hpp"
#include "mask.hpp"

namespace wonderful {

namespace detail {

// Builds laminar families as forests: for each pending block, choose a set of
// pairwise disjoint proper sub-blocks (by lowest uncovered element), then
// recurse into each chosen sub-block. Every family is produced exactly once.
template <class Visitor>
class ForestBuilder {
 public:
  ForestBuilder(std::size_t max_blocks, Visitor& visit) : max_blocks_(max_blocks), visit_(visit) {}

  void run(Mask root, std::vector<Mask> initial) {
    family_ = std::move(initial);
    pending_ = {root};
    fill();
  }

 private:
  void fill() {
    if (pending_.empty()) {
      visit_(std::span<const Mask>(family_));
      return;
    }
    Mask parent = pending_.back();
    pending_.pop_back();
    choose(parent, parent);
    pending_.push_back(parent);
  }

  void choose(Mask parent, Mask remaining) {
    if (mask::size(remaining) < 2) {
      fill();
      return;
    }
    const Mask low = remaining & (~remaining + 1);
    const Mask rest = remaining ^ low;
    choose(parent, rest);
    if (family_.size() >= max_blocks_) return;
    for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
      const Mask b = sub | low;
      if (b == parent) continue;
      family_.push_back(b);
      pending_.push_back(b);
      choose(parent, remaining & ~b);
      pending_.pop_back();
      family_.pop_back();
    }
  }

  std::size_t max_blocks_;
  Visitor& visit_;
  std::vector<Mask> family_;
  std::vector<Mask> pending_;
};

inline void check_n(int n) {
  if (n < 2) throw domain_error("n must be at least 2");
  detail::check_ambient(n);
}

}  // namespace detail

/// Visits every element of B(n-1) (laminar families over {1..n} containing V)
/// with at most `max_size` blocks, as an unordered span of packed blocks.
template <class Visitor>
void for_each_B(int n, std::size_t max_size, Visitor&& visit) {
  detail::check_n(n);
  if (max_size == 0) return;
  const Mask v = mask::range(1, n);
  detail::ForestBuilder<std::remove_reference_t<Visitor>> builder(max_size, visit);
  builder.run(v, {v});
}

/// All of B(n-1), optionally only elements with at most `max_size` blocks, in
/// canonical order.
inline std::vector<NestedSet> enumerate_B(int n, std::optional<std::size_t> max_size = std::nullopt) {
  std::vector<NestedSet> out;
  for_each_B(n, max_size.value_or(std::numeric_limits<std::size_t>::max()), [&](std::span<const Mask> f) {
    out.push_back(NestedSet::from_laminar_masks(std::vector<Mask>(f.begin(), f.end()), n));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// F^k(B(n-1)): the elements of B(n-1) with exactly k+1 blocks.
inline std::vector<NestedSet> enumerate_F(int n, int k) {
  if (k < 0) throw domain_error("k must be nonnegative");
  auto all = enumerate_B(n, static_cast<std::size_t>(k) + 1);
  std::erase_if(all, [k](const NestedSet& s) { return s.size() != static_cast<std::size_t>(k) + 1; });
  return all;
}

/// Every F-nested set over {1..n}, V optional, including the empty one.
inline std::vector<NestedSet> enumerate_nested_sets(int n,
                                                    std::optional<std::size_t> max_size = std::nullopt) {
  const std::size_t cap = max_size.value_or(std::numeric_limits<std::size_t>::max());
  std::vector<NestedSet> out;
  const Mask v = mask::range(1, n);
  for_each_B(n, cap == std::numeric_limits<std::size_t>::max() ? cap : cap + 1,
             [&](std::span<const Mask> f) {
               std::vector<Mask> with(f.begin(), f.end());
               if (with.size() <= cap) out.push_back(NestedSet::from_laminar_masks(with, n));
               std::erase(with, v);
               if (with.size() <= cap) out.push_back(NestedSet::from_laminar_masks(std::move(with), n));
             });
  std::sort(out.begin(), out.end());
  return out;
}

/// Visits every laminar family L containing `base` (blocks over {1..n}, V
/// allowed) by the blocks it adds. `visit(std::span<const Mask> added)`
/// returns whether extensions of L should be explored.
template <class Visitor>
void for_each_extension(const NestedSet& base, Visitor&& visit) {
  const int n = base.ambient();
  if (n > 16) throw domain_error("extension enumeration limited to n <= 16");
  std::vector<Mask> candidates;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    Mask b = m << 1;
    if (mask::size(b) < 2 || base.contains(b)) continue;
    bool ok = std::all_of(base.masks().begin(), base.masks().end(),
                          [b](Mask s) { return mask::laminar(b, s); });
    if (ok) candidates.push_back(b);
  }
  std::sort(candidates.begin(), candidates.end(), mask::canonical_less);
  std::vector<Mask> added;
  for_each_compatible_family(
      candidates.size(),
      [&](std::size_t i, std::size_t j) { return mask::laminar(candidates[i], candidates[j]); },
      [&](std::span<const std::size_t> chosen) {
        added.clear();
        for (std::size_t i : chosen) added.push_back(candidates[i]);
        return visit(std::span<const Mask>(added));
      });
}

/// Level of every block in the Hasse-diagram forest of `masks` without leaf
/// vertices: minimal blocks sit at level 0. Indexed like `masks`.
inline std::vector<int> forest_levels(std::span<const Mask> masks) {
  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mask::size(masks[a]) < mask::size(masks[b]); });
  std::vector<int> level(masks.size(), 0);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    std::size_t i = order[oi];
    int best = -1;
    for (std::size_t oj = 0; oj < oi; ++oj) {
      std::size_t j = order[oj];
      if (mask::proper_subset(masks[j], masks[i])) best = std::max(best, level[j]);
    }
    level[i] = best + 1;
  }
  return level;
}

/// Highest level of the Hasse-diagram tree of s, leaves being its minimal
/// blocks (no singleton leaves).
inline int depth(const NestedSet& s) {
  if (!s.contains_full()) throw domain_error("depth needs a nested set containing V");
  auto levels = forest_levels(s.masks());
  return *std::max_element(levels.begin(), levels.end());
}

}  // namespace wonderful
