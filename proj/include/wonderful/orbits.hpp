#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "action.hpp"
#include "bijection.hpp"
#include "errors.hpp"
#include "laminar.hpp"
#include "permutation.hpp"

namespace wonderful {

/// natural: S_n relabelling {1..n}.
/// extended: S_n as the subgroup of S_{n+k} fixing n+1..n+k, acting on the
///   partition side of the bijection.
/// full: all of S_{n+k} on the partition side.
enum class OrbitMode { natural, extended, full };

inline OrbitMode parse_orbit_mode(const std::string& s) {
  if (s == "natural") return OrbitMode::natural;
  if (s == "extended" || s == "restricted") return OrbitMode::extended;
  if (s == "full") return OrbitMode::full;
  throw validation_error("unknown orbit mode '" + s + "'");
}

namespace detail {

inline int acting_degree(OrbitMode mode, int n, int k) { return mode == OrbitMode::full ? n + k : n; }

/// Image of s under the permutation p of {1..degree}, in the given mode.
inline NestedSet orbit_act(OrbitMode mode, const Permutation& p, const NestedSet& s, int n, int k) {
  if (mode == OrbitMode::natural) return relabel(p, s);
  const SetPartition part = nested_to_partition(s);
  std::vector<int> im = p.images();
  for (int x = static_cast<int>(im.size()) + 1; x <= n + k; ++x) im.push_back(x);
  return partition_to_nested(relabel(Permutation(std::move(im)), part), n);
}

inline void check_orbit_args(int n, int k) {
  if (n < 2) throw domain_error("n must be at least 2");
  if (k < 1) throw domain_error("k must be at least 1");
}

}  // namespace detail

/// Orbits of F^k(B(n-1)) by breadth-first search under adjacent transpositions.
/// Each orbit is returned as its sorted member list; orbits sorted by their
/// least member.
inline std::vector<std::vector<NestedSet>> orbits(int n, int k, OrbitMode mode) {
  detail::check_orbit_args(n, k);
  const auto elements = enumerate_F(n, k);
  const int deg = detail::acting_degree(mode, n, k);
  std::vector<Permutation> gens;
  for (int i = 1; i < deg; ++i) gens.push_back(Permutation::transposition(deg, i, i + 1));

  std::set<NestedSet> unvisited(elements.begin(), elements.end());
  std::vector<std::vector<NestedSet>> out;
  while (!unvisited.empty()) {
    NestedSet start = *unvisited.begin();
    unvisited.erase(unvisited.begin());
    std::vector<NestedSet> orbit{start};
    std::deque<NestedSet> work{start};
    while (!work.empty()) {
      NestedSet x = std::move(work.front());
      work.pop_front();
      for (const auto& g : gens) {
        NestedSet y = detail::orbit_act(mode, g, x, n, k);
        auto it = unvisited.find(y);
        if (it == unvisited.end()) continue;
        unvisited.erase(it);
        orbit.push_back(y);
        work.push_back(std::move(y));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::size_t orbit_count(int k, int n, OrbitMode mode) { return orbits(n, k, mode).size(); }

/// Burnside: average number of fixed points over the whole acting group.
inline mpz_class burnside_orbit_count(int k, int n, OrbitMode mode) {
  detail::check_orbit_args(n, k);
  const auto elements = enumerate_F(n, k);
  const int deg = detail::acting_degree(mode, n, k);
  std::vector<SetPartition> parts;
  if (mode != OrbitMode::natural)
    for (const NestedSet& s : elements) parts.push_back(nested_to_partition(s));
  mpz_class fixed = 0, order = 0;
  for_each_permutation(1, deg, [&](const std::vector<int>& im) {
    std::vector<int> full = im;
    for (int x = deg + 1; x <= n + k; ++x) full.push_back(x);
    ++order;
    if (mode == OrbitMode::natural) {
      Permutation p(im);
      for (const NestedSet& s : elements)
        if (relabel(p, s) == s) ++fixed;
    } else {
      Permutation p(std::move(full));
      for (const SetPartition& q : parts)
        if (relabel(p, q) == q) ++fixed;
    }
  });
  if (fixed % order != 0) throw internal_error("Burnside sum not divisible by the group order");
  return fixed / order;
}

/// Number of multisets of k+1 block sizes >= 2 summing to n+k: the orbit
/// count of S_{n+k} on partitions with that block count.
inline std::size_t block_shape_count(int n, int k) {
  // shrink every part by one: partitions of n-1 into exactly k+1 positive parts
  const int total = n - 1, parts = k + 1;
  if (total < parts) return 0;
  std::vector<std::vector<std::size_t>> p(total + 1, std::vector<std::size_t>(parts + 1, 0));
  p[0][0] = 1;
  for (int m = 1; m <= total; ++m)
    for (int j = 1; j <= std::min(m, parts); ++j) p[m][j] = p[m - 1][j - 1] + p[m - j][j];
  return p[total][parts];
}

}  // namespace wonderful
