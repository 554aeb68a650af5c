#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "errors.hpp"
#include "mask.hpp"

namespace wonderful {

/// A set partition of {1..m}. Blocks are kept sorted by their minimum.
///
/// Two roles matter here: a C-element (partition of {1..n} with some block of
/// size >= 2, i.e. a subspace of the maximal building set) and the image of a
/// nested set under the labelled-tree bijection (k+1 blocks of size >= 2).
class SetPartition {
 public:
  SetPartition(const std::vector<std::vector<int>>& blocks, int ground) : m_(ground) {
    detail::check_ambient(ground);
    masks_.reserve(blocks.size());
    for (const auto& b : blocks) {
      Mask bm = 0;
      for (int e : b) {
        if (e < 1 || e > ground)
          throw validation_error("partition element " + std::to_string(e) + " outside 1.." +
                                 std::to_string(ground));
        if (bm & mask::bit(e)) throw validation_error("repeated element in partition block");
        bm |= mask::bit(e);
      }
      masks_.push_back(bm);
    }
    check_and_sort();
  }

  static SetPartition from_masks(std::vector<Mask> masks, int ground) {
    detail::check_ambient(ground);
    SetPartition p(ground);
    p.masks_ = std::move(masks);
    p.check_and_sort();
    return p;
  }

  /// Every element in its own block.
  static SetPartition discrete(int ground) {
    std::vector<Mask> masks;
    for (int i = 1; i <= ground; ++i) masks.push_back(mask::bit(i));
    return from_masks(std::move(masks), ground);
  }

  /// The one-block partition; as a C-element this is V.
  static SetPartition single_block(int ground) { return from_masks({mask::range(1, ground)}, ground); }

  int ground() const { return m_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<Mask>& block_masks() const { return masks_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    for (Mask b : masks_) out.push_back(mask::elements(b));
    return out;
  }

  Mask block_containing(int e) const {
    for (Mask b : masks_)
      if (b & mask::bit(e)) return b;
    throw validation_error("element " + std::to_string(e) + " not in partition ground set");
  }

  bool all_blocks_at_least(int k) const {
    return std::all_of(masks_.begin(), masks_.end(), [k](Mask b) { return mask::size(b) >= k; });
  }

  /// Has a block of size >= 2, i.e. names a nonzero subspace.
  bool is_c_element() const {
    return std::any_of(masks_.begin(), masks_.end(), [](Mask b) { return mask::size(b) >= 2; });
  }

  bool is_single_block() const { return masks_.size() == 1; }

  /// Dimension of the spanned subspace: sum of (|block| - 1).
  int dim() const { return m_ - static_cast<int>(masks_.size()); }

  /// True iff every block of *this lies inside a block of `coarser`; as
  /// subspaces, *this is contained in `coarser`.
  bool refines(const SetPartition& coarser) const {
    if (coarser.m_ != m_) return false;
    for (Mask b : masks_) {
      Mask home = coarser.block_containing(mask::min_element(b));
      if (!mask::subset(b, home)) return false;
    }
    return true;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (a.m_ != b.m_) return a.m_ <=> b.m_;
    return a.masks_ <=> b.masks_;
  }

 private:
  explicit SetPartition(int ground) : m_(ground) {}

  void check_and_sort() {
    Mask seen = 0;
    for (Mask b : masks_) {
      if (b == 0) throw validation_error("empty partition block");
      if (!mask::subset(b, mask::range(1, m_))) throw validation_error("partition block outside ground set");
      if (seen & b) throw validation_error("partition blocks overlap");
      seen |= b;
    }
    if (seen != mask::range(1, m_)) throw validation_error("partition blocks do not cover the ground set");
    std::sort(masks_.begin(), masks_.end(),
              [](Mask x, Mask y) { return mask::min_element(x) < mask::min_element(y); });
  }

  int m_;
  std::vector<Mask> masks_;
};

/// Finest partition coarser than all inputs: the sum of the subspaces.
inline SetPartition join(std::span<const SetPartition> parts, int ground) {
  std::vector<int> parent(ground + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const SetPartition& p : parts) {
    if (p.ground() != ground) throw validation_error("join of partitions over different ground sets");
    for (Mask b : p.block_masks()) {
      int root = find(mask::min_element(b));
      for (int e : mask::elements(b)) parent[find(e)] = root;
    }
  }
  std::vector<Mask> by_root(ground + 1, 0);
  for (int e = 1; e <= ground; ++e) by_root[find(e)] |= mask::bit(e);
  std::vector<Mask> blocks;
  for (Mask b : by_root)
    if (b) blocks.push_back(b);
  return SetPartition::from_masks(std::move(blocks), ground);
}

/// Visits every set partition of {1..m} (restricted growth strings).
template <class Visitor>
void for_each_set_partition(int m, Visitor&& visit) {
  std::vector<Mask> blocks;
  std::function<void(int)> rec = [&](int e) {
    if (e > m) {
      visit(std::span<const Mask>(blocks));
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= mask::bit(e);
      rec(e + 1);
      blocks[i] &= ~mask::bit(e);
    }
    blocks.push_back(mask::bit(e));
    rec(e + 1);
    blocks.pop_back();
  };
  rec(1);
}

/// All C-elements over {1..n}: partitions with at least one block of size >= 2.
inline std::vector<SetPartition> enumerate_c_elements(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](std::span<const Mask> blocks) {
    if (static_cast<int>(blocks.size()) < n)
      out.push_back(SetPartition::from_masks(std::vector<Mask>(blocks.begin(), blocks.end()), n));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// The irreducible summands of a C-element: its blocks of size >= 2.
inline std::vector<Block> decompose_irreducibles(const SetPartition& p) {
  std::vector<Block> out;
  for (Mask b : p.block_masks())
    if (mask::size(b) >= 2) out.push_back(Block::from_mask(b, p.ground()));
  if (out.empty()) throw domain_error("partition has no block of size >= 2; not a C-element");
  std::sort(out.begin(), out.end());
  return out;
}

/// A chain V > B_1 > .. > B_r of C-elements, V left implicit.
class CChain {
 public:
  explicit CChain(int ambient) : n_(ambient) { detail::check_ambient(ambient); }

  CChain(std::vector<SetPartition> links, int ambient) : n_(ambient), links_(std::move(links)) {
    detail::check_ambient(ambient);
    for (std::size_t i = 0; i < links_.size(); ++i) {
      const SetPartition& b = links_[i];
      if (b.ground() != n_) throw validation_error("C-chain link over a different ground set");
      if (!b.is_c_element()) throw validation_error("C-chain link is not a C-element");
      if (b.is_single_block()) throw validation_error("C-chain link equals V");
      if (i > 0 && !(b.refines(links_[i - 1]) && b != links_[i - 1]))
        throw validation_error("C-chain is not strictly decreasing");
    }
  }

  int ambient() const { return n_; }
  const std::vector<SetPartition>& links() const { return links_; }
  std::size_t size() const { return links_.size(); }

 private:
  int n_;
  std::vector<SetPartition> links_;
};

/// Graded poset embedding of maximal-model strata into supermaximal strata:
/// the i-th link collects V and the irreducible summands of B_r, .., B_{r-i+1}.
inline ChainNested phi_embed(const CChain& c) {
  const int n = c.ambient();
  const auto& links = c.links();
  std::vector<NestedSet> out;
  std::vector<Mask> acc{mask::range(1, n)};
  for (auto it = links.rbegin(); it != links.rend(); ++it) {
    for (const Block& b : decompose_irreducibles(*it))
      if (std::find(acc.begin(), acc.end(), b.mask()) == acc.end()) acc.push_back(b.mask());
    out.push_back(NestedSet::from_masks(acc, n));
  }
  return ChainNested(std::move(out), n);
}

}  // namespace wonderful
