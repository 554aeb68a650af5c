#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "laminar.hpp"
#include "multipoly.hpp"
#include "series.hpp"
#include "stirling.hpp"

namespace wonderful {

/// q * [j]_q = q + .. + q^j, i.e. (q^{j+1} - q)/(q - 1).
inline MultiPoly q_shifted_bracket(int j) { return MultiPoly::q() * q_bracket(j); }

/// lambda' = 1/(1 - R(lambda)), R(x) = sum_{m>=2} q[m-1]_q x^m/m!, and
/// Phi = e^lambda - 1.
inline EgfSeries lambda_series(int order) {
  if (order < 1) throw domain_error("phi needs order >= 1");
  EgfSeries lambda = EgfSeries::t(order);
  for (int it = 0; it < order; ++it) {
    EgfSeries r(order);
    EgfSeries power = lambda;
    for (int m = 2; m <= order; ++m) {
      power = power * lambda;
      r += (q_shifted_bracket(m - 1) * mpq_class(mpz_class(1), factorial(m))) * power;
    }
    EgfSeries deriv = series_inverse(EgfSeries::constant(MultiPoly(1L), order) - r);
    lambda = series_integrate(deriv.truncate(order - 1));
  }
  return lambda;
}

inline EgfSeries phi_series(int order) {
  EgfSeries e = series_exp(lambda_series(order));
  e.coeff_ref(0) -= MultiPoly(1L);
  return e;
}

/// p_2, .., p_order read off Phi (index = n).
inline std::vector<MultiPoly> minimal_poincare_polys(int order) {
  EgfSeries phi = phi_series(order);
  std::vector<MultiPoly> p(order + 1);
  for (int n = 1; n <= order; ++n) p[n] = phi.egf(n);
  return p;
}

/// w_n(z) = sum_{j=1}^{n-1} |P_2(n+j-1, j)| z^{j-1}
inline MultiPoly w_poly(int n) {
  MultiPoly w;
  for (int j = 1; j <= n - 1; ++j) w += MultiPoly::monomial(0, 0, j - 1, mpq_class(stirling2_assoc(n + j - 1, j)));
  return w;
}

/// W(t, z) = sum_{n>=2} w_n(z) t^n, ordinary coefficients.
inline EgfSeries w_series(int order) {
  EgfSeries s(order);
  for (int n = 2; n <= order; ++n) s.coeff_ref(n) = w_poly(n);
  return s;
}

inline EgfSeries psi_series(int order) {
  if (order < 2) throw domain_error("psi needs order >= 2");
  const auto p = minimal_poincare_polys(order);
  std::vector<MultiPoly> a(order + 1);
  for (int n = 2; n <= order; ++n) a[n] = p[n] * w_poly(n);
  return EgfSeries::from_egf(a, order);
}

namespace detail {

/// Gamma through t^order from psi known through t^{2 order}.
inline EgfSeries gamma_from_psi(const EgfSeries& psi, int order) {
  EgfSeries gamma(order);
  for (int l = 1; l + 1 <= order; ++l) {
    EgfSeries pw = series_pow(psi.truncate(order + l - 1), l);
    EgfSeries term = series_ddt(pw, l - 1);
    gamma += (MultiPoly::y(l) * mpq_class(mpz_class(1), factorial(l))) * term;
  }
  return gamma;
}

}  // namespace detail

/// Gamma = sum_{l>=1} (1/l!) y^l (psi^l)^{(l-1)}
inline EgfSeries gamma_series(int order) {
  if (order < 2) throw domain_error("gamma needs order >= 2");
  return detail::gamma_from_psi(psi_series(2 * order), order);
}

/// xi = Phi + sum_{nu>=1} psi^{(nu)} Gamma^nu / nu!
inline EgfSeries xi_series(int order) {
  if (order < 2) throw domain_error("xi needs order >= 2");
  const EgfSeries psi = psi_series(2 * order);
  const EgfSeries gamma = detail::gamma_from_psi(psi, order);
  EgfSeries xi = phi_series(order);
  EgfSeries gpow = EgfSeries::constant(MultiPoly(1L), order);
  for (int nu = 1; 2 * nu <= order; ++nu) {
    gpow = gpow * gamma;
    EgfSeries d = series_ddt(psi.truncate(order + nu), nu);
    xi += mpq_class(mpz_class(1), factorial(nu)) * (d * gpow);
  }
  return xi;
}

/// Images of z^r: sum over compositions of r into parts d_i >= min_part of
/// r!/prod d_i! * prod q[d_i - 1]_q.
inline MultiPoly z_image(int r, int min_part = 2) {
  if (r == 0) return MultiPoly(1L);
  // c[m]: the same sum for m instead of r, without the r! factor
  std::vector<MultiPoly> c(r + 1);
  c[0] = MultiPoly(1L);
  for (int m = 1; m <= r; ++m)
    for (int d = std::max(min_part, 1); d <= m; ++d)
      c[m] += c[m - d] * q_shifted_bracket(d - 1) * mpq_class(mpz_class(1), factorial(d));
  return c[r] * mpq_class(factorial(r));
}

struct SuperSubstitution {
  SubstitutionTable y, z;
};

inline SuperSubstitution super_substitution(int max_exp) {
  SuperSubstitution s;
  for (int l = 0; l <= max_exp; ++l) {
    s.y[l] = l == 0 ? MultiPoly(1L) : q_shifted_bracket(l - 1);
    s.z[l] = z_image(l);
  }
  return s;
}

inline EgfSeries phisuper_from_xi(const EgfSeries& xi, const SuperSubstitution& sub) {
  return substitute_monomials(xi, sub.y, sub.z);
}

/// xi_top(y, z) = xi(y + z, 0) - xi(z, 0) + xi(0, 0): the stratum factor
/// P(D_T) now sits at the top T of the chain, and y^{|S_1|-1} z^{|T|-|S_1|}
/// runs over the nested S_1 with {V} < S_1 <= T.
inline EgfSeries xi_top_from_xi(const EgfSeries& xi) {
  return xi.map_coefficients([](const MultiPoly& p) {
    std::map<int, MultiPoly> binom{{0, MultiPoly(1L)}};
    auto power = [&](int k) -> const MultiPoly& {
      for (int i = static_cast<int>(binom.size()); i <= k; ++i) binom[i] = binom[i - 1] * (MultiPoly::y() + MultiPoly::z());
      return binom[k];
    };
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
      const auto [a, k, r] = e;
      if (r != 0) continue;
      const MultiPoly qa = MultiPoly::monomial(a, 0, 0, c);
      out += k == 0 ? qa : qa * (power(k) - MultiPoly::z(k));
    }
    return out;
  });
}

inline EgfSeries xi_top_series(int order) { return xi_top_from_xi(xi_series(order)); }

inline EgfSeries phisuper_series(int order) {
  return phisuper_from_xi(xi_top_series(order), super_substitution(order));
}

/// q = -1; y^k -> -1 for even k > 0 and 0 for odd k; z^r -> E_r. Terms
/// without y carry no z.
inline EgfSeries euler_real_from_xi(const EgfSeries& xi) {
  std::map<int, mpz_class> secant;
  return xi.map_coefficients([&](const MultiPoly& p) {
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
      const auto [a, k, r] = e;
      mpq_class v = c;
      if (a % 2) v = -v;
      if (k == 0) {
        if (r > 0) throw domain_error("monomial with z but no y in the Euler substitution");
      } else {
        if (k % 2) continue;
        if (!secant.count(r)) secant[r] = euler_secant(r);
        v *= -secant[r];
      }
      total += v;
    }
    return MultiPoly(total);
  });
}

inline EgfSeries euler_real_series(int order) { return euler_real_from_xi(xi_top_series(order)); }

/// Psi = e^t * prod_{i=3..T} exp(z q[i-2]_q t^i / i!)
inline EgfSeries bigpsi_formula(int order) {
  if (order < 1) throw domain_error("bigpsi needs order >= 1");
  EgfSeries arg = EgfSeries::t(order);
  for (int i = 3; i <= order; ++i)
    arg += EgfSeries::monomial(MultiPoly::z() * q_shifted_bracket(i - 2) * mpq_class(mpz_class(1), factorial(i)), i,
                               order);
  return series_exp(arg);
}

/// P(S): the Yuzvinsky monomials with support exactly S (background {V}),
/// counted by degree.
inline MultiPoly support_polynomial(const NestedSet& s) {
  MultiPoly p(1L);
  const NestedSet bg = NestedSet::full(s.ambient());
  for (const Block& a : s.blocks()) {
    std::vector<Block> below;
    for (const Block& b : s.blocks())
      if (a.includes(b) && a != b) below.push_back(b);
    const int d = d_HBS(below, a, bg);
    if (d < 2) return MultiPoly();
    p *= q_shifted_bracket(d - 1);
  }
  return p;
}

/// Psi = 1 + sum over n >= 2 and all nested sets S over {1..n} (V optional)
/// of P(S) z^|S| t^{n+|S|-1}/(n+|S|-1)!.
inline EgfSeries bigpsi_direct(int order) {
  if (order < 1) throw domain_error("bigpsi needs order >= 1");
  std::vector<MultiPoly> a(order + 1);
  a[0] = MultiPoly(1L);
  for (int n = 2; n <= order + 1; ++n) {
    const int cap = order - n + 1;
    for (const NestedSet& s : enumerate_nested_sets(n, static_cast<std::size_t>(cap))) {
      const int sz = static_cast<int>(s.size());
      a[n + sz - 1] += support_polynomial(s) * MultiPoly::z(sz);
    }
  }
  return EgfSeries::from_egf(a, order);
}

/// sum over s of the t^{n-1+s}/(n-1+s)! z^s coefficient of Psi.
inline MultiPoly extract_poincare_from_bigpsi(const EgfSeries& psi, int n) {
  if (n < 2) throw domain_error("n must be at least 2");
  if (psi.order() < 2 * n)
    throw domain_error("Psi truncated at t^" + std::to_string(psi.order()) + "; extraction for n = " +
                       std::to_string(n) + " needs t^" + std::to_string(2 * n));
  MultiPoly out;
  for (int s = 0; n - 1 + s <= psi.order(); ++s) {
    const MultiPoly c = psi.egf(n - 1 + s);
    for (const auto& [e, v] : c.terms())
      if (e[2] == s) out.add_term({e[0], e[1], 0}, v);
  }
  return out;
}

/// xi evaluated by enumeration: Phi from the Yuzvinsky bases plus, for
/// every S in B(n-1) with |S| >= 2, P(D_S) N_{r,S} y^{|S|-1} z^r.
inline EgfSeries xi_direct(int n_max) {
  if (n_max < 2) throw domain_error("xi_direct needs n_max >= 2");
  std::vector<MultiPoly> a(n_max + 1);
  a[1] = MultiPoly(1L);
  for (int n = 2; n <= n_max; ++n) {
    const auto poset = detail::b_poset(n);
    MultiPoly total = poincare_stratum(NestedSet::full(n));
    for (std::size_t i = 0; i < poset.elems.size(); ++i) {
      const NestedSet& s = poset.elems[i];
      if (s.size() < 2) continue;
      std::map<int, long> n_r{{0, 1}};
      for (std::size_t j : poset.up[i]) ++n_r[static_cast<int>(poset.elems[j].size() - s.size())];
      MultiPoly counts;
      for (const auto& [r, cnt] : n_r)
        counts += MultiPoly::monomial(0, static_cast<int>(s.size()) - 1, r, mpq_class(cnt));
      total += poincare_stratum(s) * counts;
    }
    a[n] = total;
  }
  return EgfSeries::from_egf(a, n_max);
}

/// xi_top by enumeration: for every T in B(n-1) with |T| >= 2 and every
/// S_1 obtained from T by dropping some of its blocks other than V, with
/// S_1 != {V}, the term P(D_T) y^{|S_1|-1} z^{|T|-|S_1|}.
inline EgfSeries xi_top_direct(int n_max) {
  if (n_max < 2) throw domain_error("xi_top_direct needs n_max >= 2");
  std::vector<MultiPoly> a(n_max + 1);
  a[1] = MultiPoly(1L);
  for (int n = 2; n <= n_max; ++n) {
    MultiPoly total;
    for (const NestedSet& t : enumerate_B(n)) {
      const int m = static_cast<int>(t.size()) - 1;
      MultiPoly counts;
      if (m == 0) counts = MultiPoly(1L);
      for (unsigned keep = 1; m > 0 && keep < (1u << m); ++keep) {
        const int kept = std::popcount(keep);
        counts += MultiPoly::monomial(0, kept, m - kept);
      }
      total += poincare_stratum(t) * counts;
    }
    a[n] = total;
  }
  return EgfSeries::from_egf(a, n_max);
}

}  // namespace wonderful
