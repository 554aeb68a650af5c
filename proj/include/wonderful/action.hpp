#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "errors.hpp"
#include "mask.hpp"
#include "partition.hpp"
#include "permutation.hpp"

namespace wonderful {

namespace detail {

inline void check_degree(const ExtPermutation& sigma, int n) {
  if (sigma.top() != n)
    throw validation_error("permutation of {0.." + std::to_string(sigma.top()) + "} used on ambient " +
                           std::to_string(n));
}

}  // namespace detail

/// sigma . A on packed blocks over {1..n}; V is fixed, and an image through 0
/// is replaced by its complement in {0..n}.
inline Mask act_mask(const ExtPermutation& sigma, Mask a, int n) {
  const Mask v = mask::range(1, n);
  if (a == v) return v;
  Mask img = sigma.apply(a);
  if (img & mask::bit(0)) img = mask::range(0, n) & ~img;
  return img;
}

inline Block act_block(const ExtPermutation& sigma, const Block& a) {
  detail::check_degree(sigma, a.ambient());
  return Block::from_mask(act_mask(sigma, a.mask(), a.ambient()), a.ambient());
}

inline NestedSet act_nested(const ExtPermutation& sigma, const NestedSet& s) {
  const int n = s.ambient();
  detail::check_degree(sigma, n);
  if (!s.contains_full()) throw domain_error("the extended action is defined on nested sets containing V");
  std::vector<Mask> out;
  out.reserve(s.size());
  for (Mask m : s.masks()) out.push_back(act_mask(sigma, m, n));
  std::sort(out.begin(), out.end(), mask::canonical_less);
  if (std::adjacent_find(out.begin(), out.end()) != out.end() || !is_laminar(out))
    throw internal_error("image of a nested set is not nested");
  return NestedSet::from_laminar_masks(std::move(out), n);
}

inline ChainNested act_chain(const ExtPermutation& sigma, const ChainNested& c) {
  std::vector<NestedSet> out;
  for (const NestedSet& t : c.links()) out.push_back(act_nested(sigma, t));
  return ChainNested(std::move(out), c.ambient());
}

/// Plain relabelling by a permutation of {1..n}.
inline NestedSet relabel(const Permutation& p, const NestedSet& s) {
  if (p.top() != s.ambient()) throw validation_error("permutation degree differs from ambient");
  std::vector<Mask> out;
  for (Mask m : s.masks()) out.push_back(p.apply(m));
  return NestedSet::from_laminar_masks(std::move(out), s.ambient());
}

inline SetPartition relabel(const Permutation& p, const SetPartition& q) {
  if (p.top() != q.ground()) throw validation_error("permutation degree differs from ground set");
  std::vector<Mask> out;
  for (Mask m : q.block_masks()) out.push_back(p.apply(m));
  return SetPartition::from_masks(std::move(out), q.ground());
}

/// A set partition of {1..m} with a nonnegative label on every block.
class LabelledPartition {
 public:
  LabelledPartition(SetPartition blocks, std::vector<int> labels)
      : blocks_(std::move(blocks)), labels_(std::move(labels)) {
    if (labels_.size() != blocks_.size()) throw validation_error("one label per block required");
    const int m = blocks_.ground();
    const auto& bm = blocks_.block_masks();
    for (std::size_t i = 0; i < bm.size(); ++i) {
      const int sz = mask::size(bm[i]);
      const bool has_top = (bm[i] & mask::bit(m)) != 0;
      if (labels_[i] < 0 || labels_[i] > sz - 2)
        throw validation_error("label " + std::to_string(labels_[i]) + " outside 0.." + std::to_string(sz - 2));
      if (labels_[i] == 0 && !has_top) throw validation_error("only the block containing m may carry label 0");
      if (sz < 2) throw validation_error("labelled partition blocks need at least two elements");
    }
  }

  const SetPartition& partition() const { return blocks_; }
  const std::vector<int>& labels() const { return labels_; }
  int ground() const { return blocks_.ground(); }

  bool has_zero_label() const { return std::find(labels_.begin(), labels_.end(), 0) != labels_.end(); }

  int label_of(Mask block) const {
    const auto& bm = blocks_.block_masks();
    for (std::size_t i = 0; i < bm.size(); ++i)
      if (bm[i] == block) return labels_[i];
    throw validation_error("not a block of this partition");
  }

  friend bool operator==(const LabelledPartition&, const LabelledPartition&) = default;
  friend std::strong_ordering operator<=>(const LabelledPartition& a, const LabelledPartition& b) {
    if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  SetPartition blocks_;
  std::vector<int> labels_;
};

inline LabelledPartition act_labelled_partition(const Permutation& pi, const LabelledPartition& lp) {
  const int m = lp.ground();
  if (pi.top() != m) throw validation_error("permutation degree differs from ground set");
  if (lp.has_zero_label() && !pi.fixes(m))
    throw domain_error("with a zero label present the acting group fixes " + std::to_string(m));
  SetPartition moved = relabel(pi, lp.partition());
  std::vector<int> labels;
  for (Mask b : moved.block_masks()) labels.push_back(lp.label_of(pi.inverse().apply(b)));
  return LabelledPartition(std::move(moved), std::move(labels));
}

}  // namespace wonderful
