#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"

namespace wonderful {

inline constexpr int kDefaultOrder = 12;

/// Power series in t truncated after t^T, with ordinary coefficients. The
/// exponential reading n! * c_n is available through egf().
class EgfSeries {
 public:
  explicit EgfSeries(int order = kDefaultOrder) : coeffs_(check_order(order) + 1) {}

  EgfSeries(std::vector<MultiPoly> coeffs, int order) : coeffs_(std::move(coeffs)) {
    check_order(order);
    coeffs_.resize(order + 1);
  }

  static EgfSeries constant(const MultiPoly& c, int order) {
    EgfSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * t^k
  static EgfSeries monomial(const MultiPoly& c, int k, int order) {
    EgfSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  static EgfSeries t(int order) { return monomial(MultiPoly(1L), 1, order); }

  /// Series from exponential coefficients: sum a_n t^n / n!.
  static EgfSeries from_egf(const std::vector<MultiPoly>& a, int order) {
    EgfSeries s(order);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
      s.coeffs_[i] = a[i] * mpq_class(mpz_class(1), factorial(i));
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  const MultiPoly& coeff(int n) const {
    if (n < 0 || n > order())
      throw domain_error("coefficient t^" + std::to_string(n) + " beyond truncation order " +
                         std::to_string(order()));
    return coeffs_[n];
  }
  MultiPoly& coeff_ref(int n) {
    if (n < 0 || n > order()) throw domain_error("coefficient beyond truncation order");
    return coeffs_[n];
  }

  /// n! * c_n, the coefficient of t^n/n!.
  MultiPoly egf_rational(int n) const { return coeff(n) * mpq_class(factorial(n)); }

  /// n! * c_n, asserting integer coefficients.
  MultiPoly egf(int n) const {
    MultiPoly p = egf_rational(n);
    if (!p.has_integer_coefficients())
      throw internal_error("coefficient of t^" + std::to_string(n) + "/" + std::to_string(n) +
                           "! is not integral: " + p.to_string());
    return p;
  }

  EgfSeries truncate(int order) const {
    if (order > this->order()) throw domain_error("cannot extend a truncated series");
    return EgfSeries(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
  }

  EgfSeries map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const {
    EgfSeries out(order());
    for (int i = 0; i <= order(); ++i) out.coeffs_[i] = f(coeffs_[i]);
    return out;
  }

  friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
    EgfSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }
  friend EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) {
    EgfSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    EgfSeries out(std::min(a.order(), b.order()));
    const int T = out.order();
    for (int i = 0; i <= T; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= T; ++j)
        if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend EgfSeries operator*(const MultiPoly& c, const EgfSeries& s) {
    return s.map_coefficients([&](const MultiPoly& p) { return c * p; });
  }
  EgfSeries& operator+=(const EgfSeries& o) { return *this = *this + o; }
  EgfSeries& operator*=(const EgfSeries& o) { return *this = *this * o; }

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw domain_error("truncation order must be nonnegative");
    return order;
  }

  std::vector<MultiPoly> coeffs_;
};

inline EgfSeries series_pow(const EgfSeries& s, int k) {
  if (k < 0) throw domain_error("negative power of a series");
  EgfSeries result = EgfSeries::constant(MultiPoly(1L), s.order());
  EgfSeries base = s;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// exp(s) for s with zero constant term: E' = s' E, so n E_n = sum k s_k E_{n-k}.
inline EgfSeries series_exp(const EgfSeries& s) {
  if (!s.coeff(0).is_zero()) throw domain_error("series_exp needs a zero constant term");
  const int T = s.order();
  std::vector<MultiPoly> e(T + 1);
  e[0] = MultiPoly(1L);
  for (int n = 1; n <= T; ++n) {
    MultiPoly acc;
    for (int k = 1; k <= n; ++k)
      if (!s.coeff(k).is_zero()) acc += s.coeff(k) * e[n - k] * mpq_class(k);
    e[n] = acc * mpq_class(1, n);
  }
  return EgfSeries(std::move(e), T);
}

/// d/dt; the result is known one order less.
inline EgfSeries series_ddt(const EgfSeries& s) {
  const int T = s.order();
  if (T == 0) return EgfSeries(0);
  std::vector<MultiPoly> d(T);
  for (int n = 1; n <= T; ++n) d[n - 1] = s.coeff(n) * mpq_class(n);
  return EgfSeries(std::move(d), T - 1);
}

inline EgfSeries series_ddt(const EgfSeries& s, int j) {
  EgfSeries out = s;
  for (int i = 0; i < j; ++i) out = series_ddt(out);
  return out;
}

/// Antiderivative with zero constant term; known one order more.
inline EgfSeries series_integrate(const EgfSeries& s) {
  const int T = s.order();
  std::vector<MultiPoly> out(T + 2);
  for (int n = 0; n <= T; ++n) out[n + 1] = s.coeff(n) * mpq_class(1, n + 1);
  return EgfSeries(std::move(out), T + 1);
}

/// 1/s for s whose constant term is a nonzero rational.
inline EgfSeries series_inverse(const EgfSeries& s) {
  const MultiPoly& c0 = s.coeff(0);
  if (c0.term_count() != 1 || !c0.terms().count({0, 0, 0}))
    throw domain_error("series_inverse needs a nonzero scalar constant term");
  const mpq_class inv = 1 / c0.coefficient({0, 0, 0});
  const int T = s.order();
  std::vector<MultiPoly> r(T + 1);
  r[0] = MultiPoly(inv);
  for (int n = 1; n <= T; ++n) {
    MultiPoly acc;
    for (int k = 1; k <= n; ++k)
      if (!s.coeff(k).is_zero()) acc += s.coeff(k) * r[n - k];
    r[n] = acc * (-inv);
  }
  return EgfSeries(std::move(r), T);
}

/// Images of y^l or z^r, indexed by the exponent.
using SubstitutionTable = std::map<int, MultiPoly>;

/// Replaces every q^a y^l z^r by q^a * sub_y[l] * sub_z[r]; exponent 0 maps
/// to 1 unless the table says otherwise.
inline EgfSeries substitute_monomials(const EgfSeries& s, const SubstitutionTable& sub_y,
                                      const SubstitutionTable& sub_z) {
  auto lookup = [](const SubstitutionTable& t, int e, const char* var) -> MultiPoly {
    auto it = t.find(e);
    if (it != t.end()) return it->second;
    if (e == 0) return MultiPoly(1L);
    throw domain_error(std::string("no substitution for ") + var + "^" + std::to_string(e));
  };
  return s.map_coefficients([&](const MultiPoly& p) {
    MultiPoly out;
    for (const auto& [e, c] : p.terms())
      out += MultiPoly::monomial(e[0], 0, 0, c) * lookup(sub_y, e[1], "y") * lookup(sub_z, e[2], "z");
    return out;
  });
}

/// Euler secant number E_r: sum E_n t^n/n! = 2/(e^t + e^{-t}) = 1/cosh t.
inline mpz_class euler_secant(int r) {
  if (r < 0) throw domain_error("euler_secant needs r >= 0");
  std::vector<MultiPoly> cosh(r + 1);
  for (int i = 0; i <= r; i += 2) cosh[i] = MultiPoly(mpq_class(mpz_class(1), factorial(i)));
  EgfSeries sec = series_inverse(EgfSeries(std::move(cosh), r));
  MultiPoly e = sec.egf(r);
  return e.coefficient({0, 0, 0}).get_num();
}

}  // namespace wonderful
