#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wonderful {

/// Packed subset of {0, .., 63}; bit i stands for the element i.
using Mask = std::uint64_t;

inline constexpr int kMaxElement = 62;

namespace mask {

constexpr Mask bit(int i) { return Mask{1} << i; }

/// {lo, .., hi}
constexpr Mask range(int lo, int hi) {
  if (hi < lo) return 0;
  Mask upper = hi >= 63 ? ~Mask{0} : (bit(hi + 1) - 1);
  return upper & ~(bit(lo) - 1);
}

constexpr int size(Mask m) { return std::popcount(m); }
constexpr int min_element(Mask m) { return std::countr_zero(m); }
constexpr int max_element(Mask m) { return 63 - std::countl_zero(m); }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr bool proper_subset(Mask a, Mask b) { return a != b && subset(a, b); }
constexpr bool laminar(Mask a, Mask b) { return (a & b) == 0 || subset(a, b) || subset(b, a); }

/// Total order used for canonical block lists: (min element, size, lex).
constexpr bool canonical_less(Mask a, Mask b) {
  if (a == b) return false;
  int ma = min_element(a), mb = min_element(b);
  if (ma != mb) return ma < mb;
  int sa = size(a), sb = size(b);
  if (sa != sb) return sa < sb;
  Mask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(size(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

template <class Range>
Mask from_elements(const Range& r) {
  Mask m = 0;
  for (int e : r) m |= bit(e);
  return m;
}

}  // namespace mask
}  // namespace wonderful
