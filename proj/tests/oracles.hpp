#pragma once

// Slow, independent reference implementations. They work on std::set<int>
// blocks and follow the definitions literally; nothing here reuses the
// library's enumeration kernels.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include <wonderful/block.hpp>
#include <wonderful/multipoly.hpp>
#include <wonderful/series.hpp>

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Set range(int lo, int hi) {
  Set s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool disjoint(const Set& a, const Set& b) {
  for (int x : a)
    if (b.count(x)) return false;
  return true;
}

inline bool laminar_pair(const Set& a, const Set& b) { return disjoint(a, b) || subset(a, b) || subset(b, a); }

inline bool laminar(const Family& f) {
  for (const Set& a : f)
    for (const Set& b : f)
      if (!laminar_pair(a, b)) return false;
  return true;
}

/// All subsets of {1..n} with at least two elements.
inline std::vector<Set> all_blocks(int n) {
  std::vector<Set> out;
  for (int m = 0; m < (1 << n); ++m) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s.insert(i + 1);
    if (s.size() >= 2) out.push_back(s);
  }
  return out;
}

/// Every laminar family of blocks over {1..n}, by plain backtracking.
inline std::vector<Family> laminar_families(int n) {
  const auto blocks = all_blocks(n);
  std::vector<Family> out;
  Family cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == blocks.size()) {
      out.push_back(cur);
      return;
    }
    rec(i + 1);
    bool ok = true;
    for (const Set& b : cur)
      if (!laminar_pair(b, blocks[i])) ok = false;
    if (ok) {
      cur.insert(blocks[i]);
      rec(i + 1);
      cur.erase(blocks[i]);
    }
  };
  rec(0);
  return out;
}

inline std::vector<Family> families_with_v(int n) {
  std::vector<Family> out;
  for (const Family& f : laminar_families(n))
    if (f.count(range(1, n))) out.push_back(f);
  return out;
}

/// Set partitions of {1..m}, as lists of blocks.
inline std::vector<std::vector<Set>> set_partitions(int m) {
  std::vector<std::vector<Set>> out;
  std::vector<Set> cur;
  std::function<void(int)> rec = [&](int e) {
    if (e > m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i].insert(e);
      rec(e + 1);
      cur[i].erase(e);
    }
    cur.push_back({e});
    rec(e + 1);
    cur.pop_back();
  };
  rec(1);
  return out;
}

inline long assoc_stirling(int m, int j) {
  long c = 0;
  for (const auto& p : set_partitions(m))
    if (static_cast<int>(p.size()) == j &&
        std::all_of(p.begin(), p.end(), [](const Set& b) { return b.size() >= 2; }))
      ++c;
  return c;
}

/// Dimension of the span of the root vectors e_i - e_j with i, j in a common
/// block, by exact Gaussian elimination.
inline int span_dim(const std::vector<Set>& blocks, int n) {
  std::vector<std::vector<mpq_class>> rows;
  for (const Set& b : blocks) {
    int first = *b.begin();
    for (int x : b) {
      if (x == first) continue;
      std::vector<mpq_class> r(n + 1, 0);
      r[first] = 1;
      r[x] = -1;
      rows.push_back(r);
    }
  }
  int rank = 0;
  for (int col = 0; col <= n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      mpq_class f = rows[i][col] / rows[rank][col];
      for (int c = 0; c <= n; ++c) rows[i][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline wonderful::MultiPoly q_pow(int a) { return wonderful::MultiPoly::q(a); }

/// sum of q^e for e = 1 .. d-1
inline wonderful::MultiPoly exponent_choices(int d) {
  wonderful::MultiPoly p;
  for (int e = 1; e < d; ++e) p += q_pow(e);
  return p;
}

/// Poincare polynomial of D_S in the minimal model straight from the
/// definition: every support T with T + S laminar, every f with
/// 1 <= f(A) < dim A - dim(sum of T and S strictly below A).
inline wonderful::MultiPoly yuz_poincare(int n, const Family& s) {
  wonderful::MultiPoly total;
  for (const Family& t : laminar_families(n)) {
    Family both = t;
    both.insert(s.begin(), s.end());
    if (!laminar(both)) continue;
    wonderful::MultiPoly term(1L);
    for (const Set& a : t) {
      std::vector<Set> below;
      for (const Set& b : both)
        if (b != a && subset(b, a)) below.push_back(b);
      const int d = static_cast<int>(a.size()) - 1 - span_dim(below, n);
      term *= exponent_choices(d);
    }
    total += term;
  }
  return total;
}

/// Minimal-model admissible monomials with background {V}: (support, f).
inline std::vector<std::map<Set, int>> yuz_monomials(int n) {
  std::vector<std::map<Set, int>> out;
  const Family bg{range(1, n)};
  for (const Family& t : laminar_families(n)) {
    std::vector<std::pair<Set, int>> bounds;
    for (const Set& a : t) {
      std::vector<Set> below;
      for (const Set& b : t)
        if (b != a && subset(b, a)) below.push_back(b);
      bounds.emplace_back(a, static_cast<int>(a.size()) - 1 - span_dim(below, n));
    }
    std::map<Set, int> f;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == bounds.size()) {
        out.push_back(f);
        return;
      }
      for (int e = 1; e < bounds[i].second; ++e) {
        f[bounds[i].first] = e;
        rec(i + 1);
      }
      f.erase(bounds[i].first);
    };
    rec(0);
  }
  return out;
}

/// Supermaximal Poincare polynomial from the chain description, all pieces
/// computed by brute force.
inline wonderful::MultiPoly supermax_poincare(int n) {
  const auto b = families_with_v(n);
  std::map<Family, wonderful::MultiPoly> strata;
  for (const Family& s : b) strata[s] = yuz_poincare(n, s);
  // walk every chain {V} < s_1 < .. < s_k explicitly; the stratum of s_k carries eta
  const Family v{range(1, n)};
  wonderful::MultiPoly total = strata[v];
  std::function<void(const Family&, const wonderful::MultiPoly&)> walk = [&](const Family& s,
                                                                            const wonderful::MultiPoly& w) {
    total += w * strata[s];
    for (const Family& t : b) {
      if (t.size() < s.size() + 2 || !std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      walk(t, w * exponent_choices(static_cast<int>(t.size() - s.size())));
    }
  };
  for (const Family& s : b)
    if (s.size() >= 3) walk(s, exponent_choices(static_cast<int>(s.size()) - 1));
  return total;
}

/// Labelled partitions of {1..m} into blocks of size >= 2 with labels
/// 0 <= l <= |I| - 2, where 0 is allowed only on the block containing m.
struct Labelled {
  std::vector<Set> blocks;  // sorted by minimum
  std::vector<int> labels;
  bool operator<(const Labelled& o) const {
    return std::tie(blocks, labels) < std::tie(o.blocks, o.labels);
  }
  bool operator==(const Labelled& o) const = default;
};

inline std::vector<Labelled> labelled_partitions(int n) {
  std::vector<Labelled> out;
  for (int k = 0; k <= n - 2; ++k) {
    const int m = n + k;
    for (auto p : set_partitions(m)) {
      if (static_cast<int>(p.size()) != k + 1) continue;
      if (!std::all_of(p.begin(), p.end(), [](const Set& b) { return b.size() >= 2; })) continue;
      std::sort(p.begin(), p.end(), [](const Set& a, const Set& b) { return *a.begin() < *b.begin(); });
      std::vector<int> labels(p.size());
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == p.size()) {
          out.push_back({p, labels});
          return;
        }
        const int lo = p[i].count(m) ? 0 : 1;
        for (int l = lo; l <= static_cast<int>(p[i].size()) - 2; ++l) {
          labels[i] = l;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  return out;
}

/// Orbit count by merging every element with all of its images under every
/// group element (union-find).
template <class Act>
std::size_t orbit_count_union_find(std::size_t count, int degree, Act&& act_index) {
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::size_t i = 0; i < count; ++i) parent[find(i)] = find(act_index(perm, i));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::size_t roots = 0;
  for (std::size_t i = 0; i < count; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

/// sum_k s^k / k!
inline wonderful::EgfSeries naive_exp(const wonderful::EgfSeries& s) {
  const int T = s.order();
  wonderful::EgfSeries total = wonderful::EgfSeries::constant(wonderful::MultiPoly(1L), T);
  wonderful::EgfSeries power = total;
  for (int k = 1; k <= T; ++k) {
    power = power * s;
    total += (wonderful::MultiPoly(mpq_class(mpz_class(1), wonderful::factorial(k)))) * power;
  }
  return total;
}

/// Image of z^r summed over every composition r = d_1 + .. + d_s with d_i >= 1
/// of r!/prod d_i! * prod (q^{d_i} - q)/(q - 1).
inline wonderful::MultiPoly literal_z_image(int r) {
  if (r == 0) return wonderful::MultiPoly(1L);
  wonderful::MultiPoly total;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      wonderful::MultiPoly term(mpq_class(wonderful::factorial(r)));
      for (int d : parts) {
        term *= wonderful::MultiPoly(mpq_class(mpz_class(1), wonderful::factorial(d)));
        wonderful::MultiPoly bracket;  // q + .. + q^{d-1}
        for (int e = 1; e < d; ++e) bracket += q_pow(e);
        term *= bracket;
      }
      total += term;
      return;
    }
    for (int d = 1; d <= left; ++d) {
      parts.push_back(d);
      rec(left - d);
      parts.pop_back();
    }
  };
  rec(r);
  return total;
}

/// Labelled tree of a nested set containing V, spelled out with sets:
/// returns the blocks of labels covered by each internal vertex.
inline std::vector<Set> tree_partition(int n, const Family& s) {
  struct Vertex {
    Set block;
    int level = 0;
    int label = 0;
  };
  std::vector<Vertex> vs;
  for (const Set& b : s) vs.push_back({b});
  auto parent_of = [&](const Set& b) -> int {
    int best = -1;
    for (int j = 0; j < static_cast<int>(vs.size()); ++j)
      if (vs[j].block != b && subset(b, vs[j].block) &&
          (best < 0 || vs[j].block.size() < vs[best].block.size()))
        best = j;
    return best;
  };
  // levels: repeat until stable
  bool changed = true;
  for (auto& v : vs) v.level = 1;
  while (changed) {
    changed = false;
    for (auto& v : vs) {
      int p = parent_of(v.block);
      if (p >= 0 && vs[p].level < v.level + 1) {
        vs[p].level = v.level + 1;
        changed = true;
      }
    }
  }
  std::vector<int> order(vs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (vs[a].level != vs[b].level) return vs[a].level < vs[b].level;
    return *vs[a].block.begin() < *vs[b].block.begin();
  });
  for (std::size_t r = 0; r < order.size(); ++r) vs[order[r]].label = n + 1 + static_cast<int>(r);
  std::vector<Set> out;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
    Set covered;
    Set leaves = vs[i].block;
    for (int j = 0; j < static_cast<int>(vs.size()); ++j)
      if (parent_of(vs[j].block) == i) {
        covered.insert(vs[j].label);
        for (int x : vs[j].block) leaves.erase(x);
      }
    covered.insert(leaves.begin(), leaves.end());
    out.push_back(covered);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Family family_of(const wonderful::NestedSet& s) {
  Family f;
  for (const wonderful::Block& b : s.blocks()) {
    auto e = b.elements();
    f.insert(Set(e.begin(), e.end()));
  }
  return f;
}

}  // namespace oracle
