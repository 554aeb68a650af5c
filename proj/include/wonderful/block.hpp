#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mask.hpp"

namespace wonderful {

namespace detail {

inline void check_ambient(int n) {
  if (n < 1 || n > kMaxElement)
    throw validation_error("ambient size " + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxElement));
}

}  // namespace detail

/// A subset of {1..n} of size at least two: an irreducible subspace of the
/// braid arrangement. The full set {1..n} is the whole space V.
class Block {
 public:
  Block(std::span<const int> elements, int ambient) : n_(ambient) {
    detail::check_ambient(ambient);
    for (int e : elements) {
      if (e < 1 || e > ambient)
        throw validation_error("block element " + std::to_string(e) + " outside 1.." +
                               std::to_string(ambient));
      if (mask_ & mask::bit(e)) throw validation_error("repeated block element " + std::to_string(e));
      mask_ |= mask::bit(e);
    }
    if (mask::size(mask_) < 2) throw validation_error("block must have at least two elements");
  }

  Block(std::initializer_list<int> elements, int ambient)
      : Block(std::span<const int>(elements.begin(), elements.size()), ambient) {}

  static Block from_mask(Mask m, int ambient) {
    auto elems = mask::elements(m);
    return Block(elems, ambient);
  }

  static Block full(int ambient) {
    detail::check_ambient(ambient);
    return Block(mask::range(1, ambient), ambient, Trusted{});
  }

  Mask mask() const { return mask_; }
  int ambient() const { return n_; }
  int size() const { return mask::size(mask_); }
  int min_element() const { return mask::min_element(mask_); }
  int max_element() const { return mask::max_element(mask_); }
  /// dim A = |A| - 1
  int dim() const { return size() - 1; }
  bool is_full() const { return mask_ == mask::range(1, n_); }
  bool contains(int e) const { return e >= 0 && e < 64 && (mask_ & mask::bit(e)); }
  bool includes(const Block& b) const { return mask::subset(b.mask_, mask_); }
  bool disjoint(const Block& b) const { return (mask_ & b.mask_) == 0; }
  std::vector<int> elements() const { return mask::elements(mask_); }

  friend bool operator==(const Block&, const Block&) = default;
  friend std::strong_ordering operator<=>(const Block& a, const Block& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    return mask::canonical_less(a.mask_, b.mask_) ? std::strong_ordering::less
                                                  : std::strong_ordering::greater;
  }

 private:
  struct Trusted {};
  Block(Mask m, int n, Trusted) : mask_(m), n_(n) {}
  friend class NestedSet;

  Mask mask_ = 0;
  int n_ = 0;
};

/// True iff the family is laminar: any two blocks are disjoint or nested.
inline bool is_nested(std::span<const Block> blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].ambient() != blocks[0].ambient())
      throw validation_error("blocks over different ambient sets");
    for (std::size_t j = 0; j < i; ++j)
      if (!mask::laminar(blocks[i].mask(), blocks[j].mask())) return false;
  }
  return true;
}

inline bool is_laminar(std::span<const Mask> masks) {
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!mask::laminar(masks[i], masks[j])) return false;
  return true;
}

/// A laminar family of blocks over {1..n}, kept in canonical order
/// (min element, then size). Elements of B(n-1) are the ones containing V.
class NestedSet {
 public:
  explicit NestedSet(int ambient) : n_(ambient) { detail::check_ambient(ambient); }

  NestedSet(std::span<const Block> blocks, int ambient) : n_(ambient) {
    detail::check_ambient(ambient);
    masks_.reserve(blocks.size());
    for (const Block& b : blocks) {
      if (b.ambient() != ambient) throw validation_error("block ambient differs from nested set ambient");
      masks_.push_back(b.mask());
    }
    normalize_and_check();
  }

  NestedSet(std::initializer_list<Block> blocks, int ambient)
      : NestedSet(std::span<const Block>(blocks.begin(), blocks.size()), ambient) {}

  /// Builds from packed blocks; validates every block and laminarity.
  static NestedSet from_masks(std::vector<Mask> masks, int ambient) {
    detail::check_ambient(ambient);
    for (Mask m : masks) (void)Block::from_mask(m, ambient);
    NestedSet s(ambient);
    s.masks_ = std::move(masks);
    s.normalize_and_check();
    return s;
  }

  /// Caller guarantees valid, distinct, pairwise laminar blocks.
  static NestedSet from_laminar_masks(std::vector<Mask> masks, int ambient) {
    NestedSet s(ambient);
    s.masks_ = std::move(masks);
    std::sort(s.masks_.begin(), s.masks_.end(), mask::canonical_less);
    return s;
  }

  /// {V}
  static NestedSet full(int ambient) {
    NestedSet s(ambient);
    s.masks_.push_back(mask::range(1, ambient));
    return s;
  }

  int ambient() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }
  const std::vector<Mask>& masks() const { return masks_; }
  Mask full_mask() const { return mask::range(1, n_); }

  std::vector<Block> blocks() const {
    std::vector<Block> out;
    out.reserve(masks_.size());
    for (Mask m : masks_) out.push_back(Block(m, n_, Block::Trusted{}));
    return out;
  }

  bool contains(Mask m) const { return std::find(masks_.begin(), masks_.end(), m) != masks_.end(); }
  bool contains(const Block& b) const { return b.ambient() == n_ && contains(b.mask()); }
  bool contains_full() const { return contains(full_mask()); }

  bool is_subset_of(const NestedSet& other) const {
    if (other.n_ != n_) return false;
    return std::includes(other.masks_.begin(), other.masks_.end(), masks_.begin(), masks_.end(),
                         mask::canonical_less);
  }

  friend bool operator==(const NestedSet&, const NestedSet&) = default;
  friend std::strong_ordering operator<=>(const NestedSet& a, const NestedSet& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    auto less = [](Mask x, Mask y) { return mask::canonical_less(x, y); };
    if (std::lexicographical_compare(a.masks_.begin(), a.masks_.end(), b.masks_.begin(), b.masks_.end(),
                                     less))
      return std::strong_ordering::less;
    if (a.masks_ == b.masks_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  void normalize_and_check() {
    std::sort(masks_.begin(), masks_.end(), mask::canonical_less);
    if (std::adjacent_find(masks_.begin(), masks_.end()) != masks_.end())
      throw validation_error("repeated block in nested set");
    if (!is_laminar(masks_)) throw domain_error("blocks do not form a laminar family");
  }

  int n_;
  std::vector<Mask> masks_;
};

/// Set-theoretic union and intersection of nested sets over the same ambient.
/// The union is not checked for laminarity.
inline std::vector<Mask> union_masks(const NestedSet& a, const NestedSet& b) {
  std::vector<Mask> out;
  std::set_union(a.masks().begin(), a.masks().end(), b.masks().begin(), b.masks().end(),
                 std::back_inserter(out), mask::canonical_less);
  return out;
}

inline std::vector<Mask> intersection_masks(const NestedSet& a, const NestedSet& b) {
  std::vector<Mask> out;
  std::set_intersection(a.masks().begin(), a.masks().end(), b.masks().begin(), b.masks().end(),
                        std::back_inserter(out), mask::canonical_less);
  return out;
}

/// A strictly increasing chain T_1 < T_2 < .. < T_r of nested sets that all
/// contain V. The empty chain stands for {{V}}: a supermaximal stratum.
class ChainNested {
 public:
  explicit ChainNested(int ambient) : n_(ambient) { detail::check_ambient(ambient); }

  ChainNested(std::vector<NestedSet> links, int ambient) : n_(ambient), links_(std::move(links)) {
    detail::check_ambient(ambient);
    for (std::size_t i = 0; i < links_.size(); ++i) {
      if (links_[i].ambient() != n_) throw validation_error("chain link over a different ambient");
      if (!links_[i].contains_full()) throw validation_error("chain link does not contain V");
      if (i > 0 && !(links_[i - 1].is_subset_of(links_[i]) && links_[i - 1].size() < links_[i].size()))
        throw validation_error("chain links are not strictly increasing");
    }
  }

  int ambient() const { return n_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }
  const std::vector<NestedSet>& links() const { return links_; }

  friend bool operator==(const ChainNested&, const ChainNested&) = default;

 private:
  int n_;
  std::vector<NestedSet> links_;
};

}  // namespace wonderful

template <>
struct std::hash<wonderful::NestedSet> {
  std::size_t operator()(const wonderful::NestedSet& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.ambient()) * 0x9e3779b97f4a7c15ULL;
    for (wonderful::Mask m : s.masks()) h = (h ^ m) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};
