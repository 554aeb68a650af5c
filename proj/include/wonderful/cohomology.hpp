#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "action.hpp"
#include "bijection.hpp"
#include "block.hpp"
#include "cliques.hpp"
#include "errors.hpp"
#include "laminar.hpp"
#include "mask.hpp"
#include "multipoly.hpp"
#include "partition.hpp"

namespace wonderful {

enum class BuildingTag { minimal, maximal };
enum class Model { minimal, maximal, supermaximal };

inline Model parse_model(const std::string& s) {
  if (s == "minimal") return Model::minimal;
  if (s == "maximal") return Model::maximal;
  if (s == "supermaximal") return Model::supermaximal;
  throw validation_error("unknown model '" + s + "'");
}

/// Dimension of the span of the given blocks: overlapping blocks merge, and
/// every merged component of size c contributes c - 1.
inline int dim_sum(std::span<const Mask> blocks) {
  std::vector<Mask> comps;
  for (Mask b : blocks) {
    Mask cur = b;
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i] & cur) {
          cur |= comps[i];
          comps[i] = comps.back();
          comps.pop_back();
          merged = true;
          break;
        }
    }
    comps.push_back(cur);
  }
  int d = 0;
  for (Mask c : comps) d += mask::size(c) - 1;
  return d;
}

inline int dim_sum(std::span<const Block> blocks) {
  std::vector<Mask> ms;
  for (const Block& b : blocks) ms.push_back(b.mask());
  return dim_sum(std::span<const Mask>(ms));
}

/// d^S_{H,B} = dim B - dim(sum of H and of the members of S strictly below B).
inline int d_HBS(std::span<const Block> h, const Block& b, const NestedSet& s) {
  std::vector<Mask> below;
  for (const Block& a : h) {
    if (!mask::proper_subset(a.mask(), b.mask())) throw domain_error("H must lie strictly below B");
    below.push_back(a.mask());
  }
  for (Mask a : s.masks())
    if (mask::proper_subset(a, b.mask())) below.push_back(a);
  return b.dim() - dim_sum(std::span<const Mask>(below));
}

/// Maximal building set: B and H are C-elements, S a chain of C-elements.
inline int d_HBS(std::span<const SetPartition> h, const SetPartition& b, std::span<const SetPartition> s) {
  std::vector<SetPartition> below;
  auto strictly_finer = [&](const SetPartition& a) { return a.refines(b) && a != b; };
  for (const SetPartition& a : h) {
    if (!strictly_finer(a)) throw domain_error("H must lie strictly below B");
    below.push_back(a);
  }
  for (const SetPartition& a : s)
    if (strictly_finer(a)) below.push_back(a);
  if (below.empty()) return b.dim();
  return b.dim() - join(below, b.ground()).dim();
}

template <class Key>
struct Monomial {
  std::vector<Key> support;
  std::vector<int> exponents;

  int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using AdmissibleMonomial = Monomial<Block>;
using MaximalMonomial = Monomial<SetPartition>;

namespace detail {

/// One nested family L = S + added, with d_A for every A in L. Members of S
/// come first. A support is `added` plus any members of S with d >= 2.
struct AdmissibleFamily {
  std::span<const std::size_t> ids;  // indices into the universe
  std::span<const int> d;
  std::size_t background;  // the first `background` ids come from S
};

/// Walks the nested families L containing the background, pruning as soon
/// as an added element has d < 2 (d only drops as L grows).
///
/// universe[0..bg) is S, the rest are candidates compatible with all of S.
/// below(i, j): element i strictly below element j.
/// dim_below(ids): dimension of the sum of the listed elements.
template <class Compatible, class Below, class DimBelow, class DimOf, class Visitor>
void for_each_admissible_family(std::size_t bg, std::size_t total, Compatible&& compatible, Below&& below,
                                DimBelow&& dim_below, DimOf&& dim_of, Visitor&& visit) {
  std::vector<std::size_t> ids;
  std::vector<int> d;
  std::vector<std::size_t> under;
  const std::size_t cand = total - bg;
  for_each_compatible_family(
      cand, [&](std::size_t i, std::size_t j) { return compatible(bg + i, bg + j); },
      [&](std::span<const std::size_t> chosen) {
        ids.clear();
        for (std::size_t i = 0; i < bg; ++i) ids.push_back(i);
        for (std::size_t c : chosen) ids.push_back(bg + c);
        d.assign(ids.size(), 0);
        for (std::size_t a = 0; a < ids.size(); ++a) {
          under.clear();
          for (std::size_t b = 0; b < ids.size(); ++b)
            if (b != a && below(ids[b], ids[a])) under.push_back(ids[b]);
          d[a] = dim_of(ids[a]) - dim_below(std::span<const std::size_t>(under));
          if (a >= bg && d[a] < 2) return false;
        }
        visit(AdmissibleFamily{ids, d, bg});
        return true;
      });
}

/// q * [d-1]_q = q + .. + q^{d-1}: the exponent choices 1..d-1.
inline MultiPoly exponent_range(int d) { return d >= 2 ? MultiPoly::q() * q_bracket(d - 1) : MultiPoly(); }

inline MultiPoly family_poincare(const AdmissibleFamily& f) {
  MultiPoly p(1L);
  for (std::size_t a = 0; a < f.ids.size(); ++a) {
    if (a < f.background)
      p *= MultiPoly(1L) + exponent_range(f.d[a]);
    else
      p *= exponent_range(f.d[a]);
  }
  return p;
}

/// Expands a family into its admissible monomials (support and exponents
/// as universe indices).
template <class Emit>
void expand_family(const AdmissibleFamily& f, Emit&& emit) {
  std::vector<std::size_t> optional;
  for (std::size_t a = 0; a < f.background; ++a)
    if (f.d[a] >= 2) optional.push_back(a);
  const std::size_t masks = std::size_t{1} << optional.size();
  for (std::size_t choice = 0; choice < masks; ++choice) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (choice >> i & 1) supp.push_back(optional[i]);
    for (std::size_t a = f.background; a < f.ids.size(); ++a) supp.push_back(a);
    std::vector<int> exps(supp.size(), 1);
    while (true) {
      std::vector<std::size_t> uni;
      for (std::size_t a : supp) uni.push_back(f.ids[a]);
      emit(uni, exps);
      std::size_t i = 0;
      for (; i < supp.size(); ++i) {
        if (exps[i] + 1 < f.d[supp[i]]) {
          ++exps[i];
          break;
        }
        exps[i] = 1;
      }
      if (i == supp.size()) break;
    }
  }
}

struct MinimalUniverse {
  int n;
  std::vector<Mask> elems;
  std::size_t bg;
};

inline MinimalUniverse minimal_universe(const NestedSet& s) {
  const int n = s.ambient();
  if (!s.contains_full()) throw domain_error("background nested set must contain V");
  if (n > 20) throw domain_error("basis enumeration limited to n <= 20");
  MinimalUniverse u{n, s.masks(), s.size()};
  std::vector<Mask> cands;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    Mask b = m << 1;
    if (mask::size(b) < 2 || s.contains(b)) continue;
    if (std::all_of(s.masks().begin(), s.masks().end(), [b](Mask x) { return mask::laminar(b, x); }))
      cands.push_back(b);
  }
  std::sort(cands.begin(), cands.end(), mask::canonical_less);
  u.elems.insert(u.elems.end(), cands.begin(), cands.end());
  return u;
}

template <class Visitor>
void for_each_minimal_family(const MinimalUniverse& u, Visitor&& visit) {
  std::vector<Mask> tmp;
  for_each_admissible_family(
      u.bg, u.elems.size(), [&](std::size_t i, std::size_t j) { return mask::laminar(u.elems[i], u.elems[j]); },
      [&](std::size_t i, std::size_t j) { return mask::proper_subset(u.elems[i], u.elems[j]); },
      [&](std::span<const std::size_t> ids) {
        // members of a laminar family below A: the maximal ones are disjoint
        int d = 0;
        for (std::size_t i : ids) {
          bool maximal = true;
          for (std::size_t j : ids)
            if (mask::proper_subset(u.elems[i], u.elems[j])) {
              maximal = false;
              break;
            }
          if (maximal) d += mask::size(u.elems[i]) - 1;
        }
        return d;
      },
      [&](std::size_t i) { return mask::size(u.elems[i]) - 1; }, visit);
}

struct MaximalUniverse {
  int n;
  std::vector<SetPartition> elems;
  std::size_t bg;
};

inline bool comparable(const SetPartition& a, const SetPartition& b) { return a.refines(b) || b.refines(a); }

inline MaximalUniverse maximal_universe(std::span<const SetPartition> s, int n) {
  if (std::none_of(s.begin(), s.end(), [](const SetPartition& p) { return p.is_single_block(); }))
    throw domain_error("background chain must contain V");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].ground() != n || !s[i].is_c_element()) throw validation_error("background is not made of C-elements");
    for (std::size_t j = 0; j < i; ++j)
      if (!comparable(s[i], s[j]) || s[i] == s[j]) throw domain_error("background is not a chain of C-elements");
  }
  MaximalUniverse u{n, std::vector<SetPartition>(s.begin(), s.end()), s.size()};
  for (const SetPartition& c : enumerate_c_elements(n)) {
    if (std::find(s.begin(), s.end(), c) != s.end()) continue;
    if (std::all_of(s.begin(), s.end(), [&](const SetPartition& x) { return comparable(c, x); }))
      u.elems.push_back(c);
  }
  return u;
}

template <class Visitor>
void for_each_maximal_family(const MaximalUniverse& u, Visitor&& visit) {
  const std::size_t total = u.elems.size();
  std::vector<char> finer(total * total, 0);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      finer[i * total + j] = i != j && u.elems[i].refines(u.elems[j]);
  for_each_admissible_family(
      u.bg, total, [&](std::size_t i, std::size_t j) { return finer[i * total + j] || finer[j * total + i]; },
      [&](std::size_t i, std::size_t j) { return finer[i * total + j] != 0; },
      [&](std::span<const std::size_t> ids) {
        // the members below A form a chain; its sum is its largest member
        int d = 0;
        for (std::size_t i : ids) d = std::max(d, u.elems[i].dim());
        return d;
      },
      [&](std::size_t i) { return u.elems[i].dim(); }, visit);
}

}  // namespace detail

/// Yuzvinsky basis of D_S in the minimal model.
inline std::vector<AdmissibleMonomial> enumerate_yuz(const NestedSet& s) {
  const auto u = detail::minimal_universe(s);
  std::vector<AdmissibleMonomial> out;
  detail::for_each_minimal_family(u, [&](const detail::AdmissibleFamily& f) {
    detail::expand_family(f, [&](const std::vector<std::size_t>& ids, const std::vector<int>& exps) {
      std::vector<std::pair<Mask, int>> terms;
      for (std::size_t i = 0; i < ids.size(); ++i) terms.emplace_back(u.elems[ids[i]], exps[i]);
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return mask::canonical_less(a.first, b.first); });
      AdmissibleMonomial m;
      for (const auto& [b, e] : terms) {
        m.support.push_back(Block::from_mask(b, u.n));
        m.exponents.push_back(e);
      }
      out.push_back(std::move(m));
    });
  });
  std::sort(out.begin(), out.end(), [](const AdmissibleMonomial& a, const AdmissibleMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.support != b.support) return a.support < b.support;
    return a.exponents < b.exponents;
  });
  return out;
}

/// Yuzvinsky basis of the maximal model with a chain of C-elements as
/// background (V must be present).
inline std::vector<MaximalMonomial> enumerate_yuz_maximal(std::span<const SetPartition> s, int n) {
  const auto u = detail::maximal_universe(s, n);
  std::vector<MaximalMonomial> out;
  detail::for_each_maximal_family(u, [&](const detail::AdmissibleFamily& f) {
    detail::expand_family(f, [&](const std::vector<std::size_t>& ids, const std::vector<int>& exps) {
      std::vector<std::pair<SetPartition, int>> terms;
      for (std::size_t i = 0; i < ids.size(); ++i) terms.emplace_back(u.elems[ids[i]], exps[i]);
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      MaximalMonomial m;
      for (auto& [p, e] : terms) {
        m.support.push_back(p);
        m.exponents.push_back(e);
      }
      out.push_back(std::move(m));
    });
  });
  std::sort(out.begin(), out.end(), [](const MaximalMonomial& a, const MaximalMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.support != b.support) return a.support < b.support;
    return a.exponents < b.exponents;
  });
  return out;
}

/// Poincare polynomial of D_S (half degrees) without listing monomials.
inline MultiPoly poincare_stratum(const NestedSet& s) {
  const auto u = detail::minimal_universe(s);
  MultiPoly p;
  detail::for_each_minimal_family(u, [&](const detail::AdmissibleFamily& f) { p += detail::family_poincare(f); });
  return p;
}

inline MultiPoly poincare_maximal_stratum(std::span<const SetPartition> s, int n) {
  const auto u = detail::maximal_universe(s, n);
  MultiPoly p;
  detail::for_each_maximal_family(u, [&](const detail::AdmissibleFamily& f) { p += detail::family_poincare(f); });
  return p;
}

struct SupermaxBasisElement {
  AdmissibleMonomial eta;
  ChainNested chain;
  std::vector<int> deltas;

  int degree() const { return eta.degree() + std::accumulate(deltas.begin(), deltas.end(), 0); }
};

namespace detail {

/// Strict supersets inside B(n-1), for every element, by index.
struct BPoset {
  std::vector<NestedSet> elems;
  std::vector<std::vector<std::size_t>> up;
};

inline BPoset b_poset(int n) {
  BPoset p;
  p.elems = enumerate_B(n);
  std::unordered_map<NestedSet, std::size_t> index;
  for (std::size_t i = 0; i < p.elems.size(); ++i) index.emplace(p.elems[i], i);
  p.up.resize(p.elems.size());
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    const NestedSet& s = p.elems[i];
    for_each_extension(s, [&](std::span<const Mask> added) {
      if (added.empty()) return true;
      std::vector<Mask> all = s.masks();
      all.insert(all.end(), added.begin(), added.end());
      p.up[i].push_back(index.at(NestedSet::from_laminar_masks(std::move(all), n)));
      return true;
    });
  }
  return p;
}

}  // namespace detail

/// Poincare polynomial of the supermaximal model from the chain basis: every
/// chain {V} < S_1 < .. < S_k contributes P(D_{S_k}) * prod q[|S_i|-|S_{i-1}|-1]_q.
inline MultiPoly poincare_supermaximal(int n) {
  detail::check_n(n);
  const auto poset = detail::b_poset(n);
  const std::size_t count = poset.elems.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return poset.elems[a].size() < poset.elems[b].size(); });
  // h[i]: sum over chains ending at element i of the delta factors
  std::vector<MultiPoly> h(count);
  for (std::size_t i = 0; i < count; ++i) h[i] = detail::exponent_range(static_cast<int>(poset.elems[i].size()) - 1);
  MultiPoly total = poincare_stratum(NestedSet::full(n));
  for (std::size_t i : order) {
    if (h[i].is_zero()) continue;
    for (std::size_t j : poset.up[i]) {
      const int gap = static_cast<int>(poset.elems[j].size() - poset.elems[i].size());
      if (gap >= 2) h[j] += detail::exponent_range(gap) * h[i];
    }
    total += poincare_stratum(poset.elems[i]) * h[i];
  }
  return total;
}

/// Every basis element (eta, chain, deltas) of the supermaximal model; eta
/// runs over the Yuzvinsky basis of the stratum of the last link.
inline std::vector<SupermaxBasisElement> enumerate_supermax_basis(int n) {
  detail::check_n(n);
  const auto poset = detail::b_poset(n);
  const NestedSet base = NestedSet::full(n);
  std::vector<SupermaxBasisElement> out;
  for (const AdmissibleMonomial& m : enumerate_yuz(base)) out.push_back({m, ChainNested(n), {}});

  std::vector<std::optional<std::vector<AdmissibleMonomial>>> etas(poset.elems.size());
  std::vector<std::size_t> chain;
  std::vector<int> deltas;
  auto emit = [&]() {
    const std::size_t last = chain.back();
    if (!etas[last]) etas[last] = enumerate_yuz(poset.elems[last]);
    std::vector<NestedSet> links;
    for (std::size_t i : chain) links.push_back(poset.elems[i]);
    ChainNested c(std::move(links), n);
    for (const AdmissibleMonomial& eta : *etas[last]) out.push_back({eta, c, deltas});
  };
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    for (std::size_t j : poset.up[i]) {
      const int gap = static_cast<int>(poset.elems[j].size() - poset.elems[i].size());
      if (gap < 2) continue;
      chain.push_back(j);
      for (int dl = 1; dl <= gap - 1; ++dl) {
        deltas.push_back(dl);
        emit();
        extend(j);
        deltas.pop_back();
      }
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < poset.elems.size(); ++i) {
    const int gap = static_cast<int>(poset.elems[i].size()) - 1;
    if (gap < 2) continue;
    chain = {i};
    for (int dl = 1; dl <= gap - 1; ++dl) {
      deltas = {dl};
      emit();
      extend(i);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SupermaxBasisElement& a, const SupermaxBasisElement& b) { return a.degree() < b.degree(); });
  return out;
}

/// Labelled partition of a minimal-model monomial with background {V}: the
/// labelled tree of supp f + V, each vertex block labelled by its exponent.
inline LabelledPartition monomial_to_labelled_partition(const AdmissibleMonomial& m, int n) {
  std::vector<Mask> masks{mask::range(1, n)};
  for (const Block& b : m.support) {
    if (b.ambient() != n) throw validation_error("monomial ambient differs from n");
    if (!b.is_full()) masks.push_back(b.mask());
  }
  NestedSet s = NestedSet::from_masks(std::move(masks), n);
  const auto tree = labelled_tree(s);
  const int ground = n + static_cast<int>(s.size()) - 1;
  std::vector<Mask> blocks;
  std::vector<int> labels;
  for (const TreeVertex& v : tree) {
    blocks.push_back(v.children);
    int label = 0;
    for (std::size_t i = 0; i < m.support.size(); ++i)
      if (m.support[i].mask() == v.block) label = m.exponents[i];
    labels.push_back(label);
  }
  // SetPartition sorts its blocks by minimum; carry the labels along
  SetPartition part = SetPartition::from_masks(blocks, ground);
  std::vector<int> sorted;
  for (Mask b : part.block_masks())
    sorted.push_back(labels[std::find(blocks.begin(), blocks.end(), b) - blocks.begin()]);
  return LabelledPartition(std::move(part), std::move(sorted));
}

/// Half-degree Poincare polynomial of the whole model.
inline MultiPoly poincare(Model model, int n) {
  detail::check_n(n);
  switch (model) {
    case Model::minimal:
      return poincare_stratum(NestedSet::full(n));
    case Model::maximal: {
      std::vector<SetPartition> s{SetPartition::single_block(n)};
      return poincare_maximal_stratum(s, n);
    }
    case Model::supermaximal:
      return poincare_supermaximal(n);
  }
  throw validation_error("unknown model");
}

}  // namespace wonderful
