#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "generating.hpp"
#include "multipoly.hpp"
#include "series.hpp"

namespace wonderful {

/// Unlabelled rooted tree, encoded by the ids of its root's subtrees in
/// nondecreasing order. Ids index the list returned by rooted_trees().
struct RootedTree {
  std::vector<std::size_t> children;
  int vertices = 1;
  mpz_class automorphisms = 1;
};

/// All unlabelled rooted trees with at most max_vertices vertices, by size.
inline std::vector<RootedTree> rooted_trees(int max_vertices) {
  std::vector<RootedTree> trees;
  if (max_vertices < 1) return trees;
  trees.push_back({});
  for (int size = 2; size <= max_vertices; ++size) {
    const std::size_t known = trees.size();
    std::vector<std::size_t> kids;
    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int remaining) {
      if (remaining == 0) {
        RootedTree t;
        t.children = kids;
        t.vertices = size;
        for (std::size_t c : kids) t.automorphisms *= trees[c].automorphisms;
        for (std::size_t i = 0; i < kids.size();) {
          std::size_t j = i;
          while (j < kids.size() && kids[j] == kids[i]) ++j;
          t.automorphisms *= factorial(static_cast<int>(j - i));
          i = j;
        }
        trees.push_back(std::move(t));
        return;
      }
      for (std::size_t c = from; c < known; ++c) {
        if (trees[c].vertices > remaining) continue;
        kids.push_back(c);
        pick(c, remaining - trees[c].vertices);
        kids.pop_back();
      }
    };
    pick(0, size - 1);
  }
  return trees;
}

/// Sum over rooted trees with at most order vertices of Q(T)/|Aut T|, where
/// a vertex with nu children contributes y^nu psi^{(nu)}.
inline EgfSeries tree_sum(const EgfSeries& psi, int order) {
  const auto trees = rooted_trees(order);
  std::vector<EgfSeries> derivs;
  for (int nu = 0; nu < order; ++nu)
    derivs.push_back((MultiPoly::y(nu) * series_ddt(psi.truncate(order + nu), nu)));
  std::vector<EgfSeries> q;
  EgfSeries total(order);
  for (const RootedTree& t : trees) {
    EgfSeries v = derivs[t.children.size()];
    for (std::size_t c : t.children) v = v * q[c];
    q.push_back(v);
    total += mpq_class(mpz_class(1), t.automorphisms) * v;
  }
  return total;
}

/// sum_{n>=1} (1/n!) y^{n-1} (psi^n)^{(n-1)}
inline EgfSeries tree_sum_closed(const EgfSeries& psi, int order) {
  EgfSeries total(order);
  for (int n = 1; n <= order; ++n) {
    EgfSeries term = series_ddt(series_pow(psi.truncate(order + n - 1), n), n - 1);
    total += (MultiPoly::y(n - 1) * mpq_class(mpz_class(1), factorial(n))) * term;
  }
  return total;
}

inline bool tree_sum_check(int order) {
  if (order < 1) throw domain_error("tree_sum_check needs order >= 1");
  const EgfSeries psi = psi_series(2 * order);
  return tree_sum(psi, order) == tree_sum_closed(psi, order);
}

}  // namespace wonderful
