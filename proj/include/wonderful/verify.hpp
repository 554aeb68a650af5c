#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "action.hpp"
#include "bijection.hpp"
#include "closure.hpp"
#include "cohomology.hpp"
#include "generating.hpp"
#include "laminar.hpp"
#include "orbits.hpp"
#include "rooted_trees.hpp"
#include "stirling.hpp"

namespace wonderful {

struct CheckResult {
  std::string name;
  std::string parameters;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
      arr.push_back({{"name", c.name},
                     {"parameters", c.parameters},
                     {"status", c.passed ? "pass" : "fail"},
                     {"expected", c.expected},
                     {"actual", c.actual}});
    return {{"checks", arr}, {"overall", overall() ? "pass" : "fail"}};
  }
};

struct VerifyOptions {
  int n_max = 6;
  int order = 8;
  /// Replaces the y/z table of the supermaximal substitution (fixtures).
  std::optional<SuperSubstitution> substitution;
};

namespace detail {

struct Mismatch {
  std::string expected, actual;
};

/// A check returns the first mismatch, or nothing when it holds.
using CheckFn = std::function<std::optional<Mismatch>()>;

inline std::optional<Mismatch> differ(const MultiPoly& expected, const MultiPoly& actual, const std::string& where) {
  if (expected == actual) return std::nullopt;
  return Mismatch{where + ": " + expected.to_string(), where + ": " + actual.to_string()};
}

inline std::vector<std::pair<std::string, CheckFn>> verification_checks(const VerifyOptions& o) {
  const int n_max = o.n_max;
  const int order = o.order;
  std::vector<std::pair<std::string, CheckFn>> checks;

  checks.emplace_back("action.axioms", [=]() -> std::optional<Mismatch> {
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
      const auto gens = adjacent_generators(n);
      const auto id = ExtPermutation::identity(n);
      for (Mask m = 1; m < (Mask{1} << n); ++m) {
        Mask a = m << 1;
        if (mask::size(a) < 2) continue;
        if (act_mask(id, a, n) != a) return Mismatch{"identity fixes every block", "moved " + std::to_string(a)};
        for (const auto& s : gens)
          for (const auto& t : gens)
            if (act_mask(s, act_mask(t, a, n), n) != act_mask(s * t, a, n))
              return Mismatch{"compatible composition", "failure at n=" + std::to_string(n)};
      }
    }
    return std::nullopt;
  });

  checks.emplace_back("action.laminarity", [=]() -> std::optional<Mismatch> {
    for (int n = 2; n <= n_max; ++n) {
      const auto gens = adjacent_generators(n);
      for (const NestedSet& s : enumerate_B(n))
        for (const auto& g : gens) {
          NestedSet img = act_nested(g, s);
          if (img.size() != s.size()) return Mismatch{"same cardinality", "changed at n=" + std::to_string(n)};
        }
    }
    return std::nullopt;
  });

  checks.emplace_back("bigpsi.extraction", [=]() -> std::optional<Mismatch> {
    const EgfSeries psi = bigpsi_formula(order);
    for (int n = 2; 2 * n <= order; ++n)
      if (auto d = differ(poincare(Model::minimal, n), extract_poincare_from_bigpsi(psi, n), "n=" + std::to_string(n)))
        return d;
    return std::nullopt;
  });

  checks.emplace_back("bigpsi.formula_vs_direct", [=]() -> std::optional<Mismatch> {
    const EgfSeries f = bigpsi_formula(order), d = bigpsi_direct(order);
    for (int i = 0; i <= order; ++i)
      if (auto m = differ(f.coeff(i), d.coeff(i), "t^" + std::to_string(i))) return m;
    return std::nullopt;
  });

  checks.emplace_back("bijection.count_roundtrip", [=]() -> std::optional<Mismatch> {
    const int cap = std::min(10, n_max + 3);
    for (int n = 2; n <= cap; ++n)
      for (int k = 0; n + k <= cap && k <= n - 2; ++k) {
        const auto fk = enumerate_F(n, k);
        if (mpz_class(fk.size()) != stirling2_assoc(n + k, k + 1))
          return Mismatch{stirling2_assoc(n + k, k + 1).get_str(), std::to_string(fk.size())};
        for (const NestedSet& s : fk)
          if (partition_to_nested(nested_to_partition(s), n) != s)
            return Mismatch{"roundtrip identity", "failed at n=" + std::to_string(n)};
      }
    return std::nullopt;
  });

  checks.emplace_back("closure.building_subset", [=]() -> std::optional<Mismatch> {
    for (int n = 4; n <= std::min(n_max, 6); ++n) {
      auto closed = building_closure(maximal_rank_one_seed(n), n);
      auto all = enumerate_B(n);
      if (closed != all)
        return Mismatch{std::to_string(all.size()) + " elements", std::to_string(closed.size()) + " elements"};
    }
    return std::nullopt;
  });

  checks.emplace_back("euler.real_vs_q_minus_one", [=]() -> std::optional<Mismatch> {
    const int t = std::max(2, n_max);
    const EgfSeries e = euler_real_series(t);
    for (int n = 2; n <= n_max; ++n) {
      const MultiPoly expected = poincare(Model::supermaximal, n).eval_q(-1);
      if (auto d = differ(expected, e.egf(n), "n=" + std::to_string(n))) return d;
      if (n % 2 && !e.egf(n).is_zero()) return Mismatch{"0", e.egf(n).to_string()};
    }
    return std::nullopt;
  });

  checks.emplace_back("minimal.phi_vs_enumeration", [=]() -> std::optional<Mismatch> {
    const auto p = minimal_poincare_polys(std::max(2, n_max));
    for (int n = 2; n <= n_max; ++n)
      if (auto d = differ(p[n], poincare(Model::minimal, n), "n=" + std::to_string(n))) return d;
    return std::nullopt;
  });

  checks.emplace_back("orbits.bfs_vs_burnside", [=]() -> std::optional<Mismatch> {
    for (int n = 2; n <= std::min(n_max, 6); ++n)
      for (int k = 1; n + k <= 7 && k <= n - 2; ++k)
        for (OrbitMode mode : {OrbitMode::natural, OrbitMode::extended, OrbitMode::full}) {
          mpz_class bfs = orbit_count(k, n, mode);
          mpz_class burnside = burnside_orbit_count(k, n, mode);
          if (bfs != burnside) return Mismatch{burnside.get_str(), bfs.get_str()};
          if (mode == OrbitMode::full && bfs != block_shape_count(n, k))
            return Mismatch{std::to_string(block_shape_count(n, k)), bfs.get_str()};
        }
    return std::nullopt;
  });

  checks.emplace_back("poincare.palindromic", [=]() -> std::optional<Mismatch> {
    for (int n = 2; n <= n_max; ++n)
      for (Model m : {Model::minimal, Model::maximal, Model::supermaximal}) {
        MultiPoly p = poincare(m, n);
        if (!is_palindromic(p, n - 2)) return Mismatch{"palindrome of degree " + std::to_string(n - 2), p.to_string()};
      }
    return std::nullopt;
  });

  checks.emplace_back("supermaximal.substitution_vs_basis", [=]() -> std::optional<Mismatch> {
    const int t = std::max(2, n_max);
    const SuperSubstitution sub = o.substitution ? *o.substitution : super_substitution(t);
    const EgfSeries s = phisuper_from_xi(xi_top_series(t), sub);
    for (int n = 2; n <= n_max; ++n)
      if (auto d = differ(poincare(Model::supermaximal, n), s.egf_rational(n), "n=" + std::to_string(n))) return d;
    return std::nullopt;
  });

  checks.emplace_back("trees.identity", [=]() -> std::optional<Mismatch> {
    const int t = std::min(order, 6);
    if (!tree_sum_check(t)) return Mismatch{"equal series", "mismatch through t^" + std::to_string(t)};
    return std::nullopt;
  });

  checks.emplace_back("xi.formula_vs_direct", [=]() -> std::optional<Mismatch> {
    const int t = std::max(2, n_max);
    const EgfSeries f = xi_series(t), d = xi_direct(t);
    for (int i = 0; i <= t; ++i)
      if (auto m = differ(f.coeff(i), d.coeff(i), "t^" + std::to_string(i))) return m;
    const EgfSeries ft = xi_top_from_xi(f), dt = xi_top_direct(t);
    for (int i = 0; i <= t; ++i)
      if (auto m = differ(ft.coeff(i), dt.coeff(i), "top t^" + std::to_string(i))) return m;
    return std::nullopt;
  });

  checks.emplace_back("yuzvinsky.labelled_partitions", [=]() -> std::optional<Mismatch> {
    for (int n = 2; n <= n_max; ++n) {
      std::set<LabelledPartition> image;
      std::size_t count = 0;
      for (const AdmissibleMonomial& m : enumerate_yuz(NestedSet::full(n))) {
        image.insert(monomial_to_labelled_partition(m, n));
        ++count;
      }
      if (image.size() != count) return Mismatch{"injective", "collision at n=" + std::to_string(n)};
    }
    return std::nullopt;
  });

  std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return checks;
}

}  // namespace detail

inline VerificationReport run_verification(const VerifyOptions& o) {
  if (o.n_max < 2) throw validation_error("--n-max must be at least 2");
  if (o.order < 2) throw validation_error("--order must be at least 2");
  VerificationReport report;
  const std::string params = "n_max=" + std::to_string(o.n_max) + " order=" + std::to_string(o.order);
  for (const auto& [name, fn] : detail::verification_checks(o)) {
    CheckResult r{name, params, false, "", ""};
    try {
      if (auto m = fn()) {
        r.expected = m->expected;
        r.actual = m->actual;
      } else {
        r.passed = true;
      }
    } catch (const std::exception& e) {
      r.expected = "no error";
      r.actual = e.what();
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace wonderful
