#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace wonderful {

/// Exponents of q, y, z.
using Exponent = std::array<int, 3>;

/// Sparse polynomial in q, y, z with exact rational coefficients. No zero
/// coefficient is ever stored; terms iterate in lexicographic exponent order.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, mpq_class>;

  MultiPoly() = default;
  MultiPoly(long c) { add_term({0, 0, 0}, mpq_class(c)); }  // NOLINT: implicit scalar
  MultiPoly(const mpz_class& c) { add_term({0, 0, 0}, mpq_class(c)); }
  MultiPoly(const mpq_class& c) { add_term({0, 0, 0}, c); }

  static MultiPoly monomial(int a, int b, int c, const mpq_class& coef = 1) {
    MultiPoly p;
    p.add_term({a, b, c}, coef);
    return p;
  }
  static MultiPoly q(int a = 1) { return monomial(a, 0, 0); }
  static MultiPoly y(int b = 1) { return monomial(0, b, 0); }
  static MultiPoly z(int c = 1) { return monomial(0, 0, c); }

  /// Polynomial in q from its coefficient list c_0, c_1, ...
  static MultiPoly from_q_coeffs(const std::vector<mpz_class>& cs) {
    MultiPoly p;
    for (std::size_t i = 0; i < cs.size(); ++i) p.add_term({static_cast<int>(i), 0, 0}, mpq_class(cs[i]));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  mpq_class coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  void add_term(const Exponent& e, const mpq_class& c) {
    for (int x : e)
      if (x < 0) throw domain_error("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool only_q() const {
    for (const auto& [e, c] : terms_)
      if (e[1] != 0 || e[2] != 0) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c.get_den() != 1) return false;
    return true;
  }

  /// Coefficients of q^0..q^d of a polynomial in q alone.
  std::vector<mpz_class> q_coefficients() const {
    if (!only_q()) throw domain_error("polynomial involves y or z");
    if (!has_integer_coefficients()) throw domain_error("polynomial has non-integer coefficients");
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(degree(0) + 1, 0)), 0);
    for (const auto& [e, c] : terms_) out[e[0]] = c.get_num();
    return out;
  }

  /// Substitutes a rational value for q.
  MultiPoly eval_q(const mpq_class& v) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      mpq_class f = c;
      for (int i = 0; i < e[0]; ++i) f *= v;
      out.add_term({0, e[1], e[2]}, f);
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const mpq_class& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= mpq_class(-1); }
  friend MultiPoly operator*(MultiPoly a, const mpq_class& s) { return a *= s; }
  friend MultiPoly operator*(const mpq_class& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form, terms in ascending exponent order: "1 + 5*q + q^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static constexpr const char* names[3] = {"q", "y", "z"};
    for (const auto& [e, c] : terms_) {
      mpq_class a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
      bool wrote = false;
      if (a != 1 || constant) {
        os << a.get_str();
        wrote = true;
      }
      for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (wrote) os << "*";
        os << names[v];
        if (e[v] > 1) os << "^" << e[v];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// [j]_q = 1 + q + .. + q^{j-1}; [0]_q = 0.
inline MultiPoly q_bracket(int j) {
  if (j < 0) throw domain_error("q-bracket of a negative integer");
  MultiPoly p;
  for (int i = 0; i < j; ++i) p.add_term({i, 0, 0}, 1);
  return p;
}

inline mpz_class factorial(int n) {
  if (n < 0) throw domain_error("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// True iff the q-polynomial reads the same from both ends at the given degree.
inline bool is_palindromic(const MultiPoly& p, int degree) {
  auto cs = p.q_coefficients();
  if (static_cast<int>(cs.size()) != degree + 1) return false;
  for (int i = 0; i <= degree; ++i)
    if (cs[i] != cs[degree - i]) return false;
  return true;
}

}  // namespace wonderful
