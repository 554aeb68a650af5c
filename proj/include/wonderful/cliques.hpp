#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wonderful {

/// Enumerates the families of pairwise compatible candidates (cliques of the
/// compatibility graph), each exactly once, in a depth-first order where a
/// family is visited before its extensions.
///
/// `visit(std::span<const std::size_t> chosen)` receives candidate indices in
/// increasing order and returns whether extensions of that family should be
/// explored; returning false prunes the whole subtree. The empty family is
/// visited first.
template <class Compatible, class Visitor>
void for_each_compatible_family(std::size_t count, Compatible&& compatible, Visitor&& visit) {
  const std::size_t words = (count + 63) / 64;
  std::vector<std::uint64_t> compat(count * words, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (compatible(i, j)) {
        compat[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        compat[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }

  std::vector<std::size_t> chosen;
  // allowed[d] = candidates compatible with the first d chosen ones
  std::vector<std::uint64_t> allowed(words * (count + 1), 0);
  for (std::size_t i = 0; i < count; ++i) allowed[i / 64] |= std::uint64_t{1} << (i % 64);

  if (!visit(std::span<const std::size_t>(chosen))) return;

  struct Frame {
    std::size_t next;
  };
  std::vector<Frame> stack{{0}};
  while (!stack.empty()) {
    const std::size_t depth = stack.size() - 1;
    const std::uint64_t* cur = &allowed[depth * words];
    std::size_t i = stack.back().next;
    // next allowed index >= i
    std::size_t found = count;
    for (std::size_t w = i / 64; w < words; ++w) {
      std::uint64_t bits = cur[w];
      if (w == i / 64) bits &= ~std::uint64_t{0} << (i % 64);
      if (bits) {
        found = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        break;
      }
    }
    if (found >= count) {
      stack.pop_back();
      if (!chosen.empty()) chosen.pop_back();
      continue;
    }
    stack.back().next = found + 1;
    chosen.push_back(found);
    if (visit(std::span<const std::size_t>(chosen))) {
      std::uint64_t* next = &allowed[(depth + 1) * words];
      const std::uint64_t* c = &compat[found * words];
      for (std::size_t w = 0; w < words; ++w) next[w] = cur[w] & c[w];
      stack.push_back({found + 1});
    } else {
      chosen.pop_back();
    }
  }
}

}  // namespace wonderful
