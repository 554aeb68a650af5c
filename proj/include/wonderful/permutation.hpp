#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mask.hpp"

namespace wonderful {

/// A bijection of {First, .., top}. ExtPermutation acts on {0..n}, Permutation
/// on {1..m}.
template <int First>
class PermutationOf {
 public:
  explicit PermutationOf(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw validation_error("permutation needs at least one point");
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      int i = x - First;
      if (i < 0 || i >= static_cast<int>(images_.size()) || seen[i])
        throw validation_error("image list is not a permutation of {" + std::to_string(First) + ".." +
                               std::to_string(top_for(images_.size())) + "}");
      seen[i] = true;
    }
  }

  static PermutationOf identity(int top) {
    std::vector<int> im;
    for (int x = First; x <= top; ++x) im.push_back(x);
    return PermutationOf(std::move(im));
  }

  static PermutationOf transposition(int top, int a, int b) {
    auto p = identity(top);
    p.check(a);
    p.check(b);
    std::swap(p.images_[a - First], p.images_[b - First]);
    return p;
  }

  int top() const { return top_for(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  int operator()(int x) const {
    check(x);
    return images_[x - First];
  }

  bool fixes(int x) const { return (*this)(x) == x; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + First) return false;
    return true;
  }

  Mask apply(Mask m) const {
    Mask out = 0;
    for (int e : mask::elements(m)) out |= mask::bit((*this)(e));
    return out;
  }

  /// (a * b)(x) = a(b(x))
  friend PermutationOf operator*(const PermutationOf& a, const PermutationOf& b) {
    if (a.images_.size() != b.images_.size()) throw validation_error("composing permutations of different degree");
    std::vector<int> im(a.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b.images_[i]);
    return PermutationOf(std::move(im));
  }

  PermutationOf inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i] - First] = static_cast<int>(i) + First;
    return PermutationOf(std::move(im));
  }

  friend bool operator==(const PermutationOf&, const PermutationOf&) = default;
  friend auto operator<=>(const PermutationOf&, const PermutationOf&) = default;

 private:
  static int top_for(std::size_t len) { return First + static_cast<int>(len) - 1; }
  void check(int x) const {
    if (x < First || x > top()) throw validation_error("point " + std::to_string(x) + " outside permutation domain");
  }

  std::vector<int> images_;
};

using ExtPermutation = PermutationOf<0>;
using Permutation = PermutationOf<1>;

/// The natural S_n inside S_{n+1}: fix 0.
inline ExtPermutation extend_natural(const Permutation& p) {
  std::vector<int> im{0};
  im.insert(im.end(), p.images().begin(), p.images().end());
  return ExtPermutation(std::move(im));
}

/// Calls visit(const std::vector<int>& images) for every permutation of
/// {first..top}, images listed from `first`.
template <class Visitor>
void for_each_permutation(int first, int top, Visitor&& visit) {
  std::vector<int> im;
  for (int x = first; x <= top; ++x) im.push_back(x);
  do {
    visit(static_cast<const std::vector<int>&>(im));
  } while (std::next_permutation(im.begin(), im.end()));
}

}  // namespace wonderful
