#include <catch2/catch_amalgamated.hpp>

#include <wonderful/multipoly.hpp>
#include <wonderful/series.hpp>

#include "oracles.hpp"

using namespace wonderful;

namespace {

const MultiPoly one(1L);

MultiPoly rat(long num, long den) { return MultiPoly(mpq_class(num, den)); }

}  // namespace

TEST_CASE("MultiPoly arithmetic and printing") {
  MultiPoly p = one + MultiPoly(5L) * MultiPoly::q() + MultiPoly::q(2);
  CHECK(p.to_string() == "1 + 5*q + q^2");
  CHECK((p - p).is_zero());
  CHECK(p.degree(0) == 2);
  CHECK(p.only_q());
  CHECK_FALSE((p * MultiPoly::y()).only_q());
  CHECK(p.eval_q(-1) == MultiPoly(-3L));
  CHECK(is_palindromic(p, 2));
  CHECK_FALSE(is_palindromic(p + MultiPoly::q(2), 2));
  CHECK_FALSE(is_palindromic(p, 3));
  CHECK(q_bracket(3) == one + MultiPoly::q() + MultiPoly::q(2));
  CHECK(factorial(10) == 3628800);
  CHECK((MultiPoly::q() + MultiPoly::y()) * (MultiPoly::q() - MultiPoly::y()) == MultiPoly::q(2) - MultiPoly::y(2));
  CHECK_FALSE(rat(1, 2).has_integer_coefficients());
}

TEST_CASE("series multiplication truncates") {
  EgfSeries a = EgfSeries::constant(one, 4) + EgfSeries::t(4);
  EgfSeries sq = a * a;
  CHECK(sq.coeff(0) == one);
  CHECK(sq.coeff(1) == MultiPoly(2L));
  CHECK(sq.coeff(2) == one);
  CHECK(sq.coeff(3).is_zero());
  CHECK((a * EgfSeries::t(2)).order() == 2);
  CHECK(series_pow(a, 4).coeff(2) == MultiPoly(6L));
  CHECK(series_pow(a, 0) == EgfSeries::constant(one, 4));
}

TEST_CASE("exponential of t and its coefficients") {
  EgfSeries e = series_exp(EgfSeries::t(8));
  for (int n = 0; n <= 8; ++n) {
    CHECK(e.coeff(n) == MultiPoly(mpq_class(mpz_class(1), factorial(n))));
    CHECK(e.egf(n) == one);
  }
  CHECK_THROWS_AS(series_exp(EgfSeries::constant(one, 3)), domain_error);
}

TEST_CASE("series_exp agrees with the power sum") {
  EgfSeries s(7);
  s.coeff_ref(1) = MultiPoly::y();
  s.coeff_ref(2) = MultiPoly::q() + rat(1, 3);
  s.coeff_ref(5) = MultiPoly::z(2);
  CHECK(series_exp(s) == oracle::naive_exp(s));
}

TEST_CASE("exp is a homomorphism and d/dt exp(s) = s' exp(s)") {
  EgfSeries a(6), b(6);
  a.coeff_ref(1) = MultiPoly::q();
  a.coeff_ref(3) = MultiPoly::y();
  b.coeff_ref(2) = MultiPoly::z() + one;
  CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
  EgfSeries lhs = series_ddt(series_exp(a));
  EgfSeries rhs = series_ddt(a) * series_exp(a).truncate(5);
  CHECK(lhs == rhs);
  CHECK(series_ddt(series_integrate(a)) == a);
  CHECK(series_ddt(a, 2) == series_ddt(series_ddt(a)));
}

TEST_CASE("series_inverse") {
  EgfSeries a = EgfSeries::constant(MultiPoly(2L), 6) + EgfSeries::t(6);
  EgfSeries prod = a * series_inverse(a);
  CHECK(prod == EgfSeries::constant(one, 6));
  EgfSeries bad = EgfSeries::constant(MultiPoly::q(), 3);
  CHECK_THROWS_AS(series_inverse(bad), domain_error);
}

TEST_CASE("egf requires integral coefficients") {
  EgfSeries s(3);
  s.coeff_ref(2) = rat(1, 3);
  CHECK(s.egf_rational(2) == rat(2, 3));
  CHECK_THROWS_AS(s.egf(2), internal_error);
  CHECK_THROWS_AS(s.coeff(4), domain_error);
}

TEST_CASE("substitute_monomials") {
  EgfSeries s(2);
  s.coeff_ref(1) = MultiPoly::monomial(1, 2, 1, 3) + MultiPoly::q();
  SubstitutionTable ys{{2, MultiPoly::q(5)}}, zs{{1, MultiPoly(7L)}};
  EgfSeries out = substitute_monomials(s, ys, zs);
  CHECK(out.coeff(1) == MultiPoly::monomial(6, 0, 0, 21) + MultiPoly::q());
  SubstitutionTable empty;
  CHECK_THROWS_AS(substitute_monomials(s, empty, zs), domain_error);
}

TEST_CASE("Euler secant numbers") {
  const long expected[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521};
  for (int r = 0; r <= 10; ++r) CHECK(euler_secant(r) == expected[r]);
  CHECK_THROWS_AS(euler_secant(-1), domain_error);
}
