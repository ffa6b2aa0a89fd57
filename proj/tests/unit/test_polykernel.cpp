#include <random>

#include "doctest.h"
#include "gcmwb/error.hpp"
#include "gcmwb/polynomial.hpp"
#include "helpers.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

TEST_CASE("coefficients stay canonical in [0, p)") {
  const Field f = Field::prime(101);
  CHECK(Coefficient(f, -1L).residue() == 100);
  CHECK(Coefficient(f, 205L).residue() == 3);
  CHECK((Coefficient(f, 7L) * Coefficient(f, 7L).inverse()).is_one());
  CHECK(Coefficient(f, 100L).to_string() == "-1");
  CHECK_THROWS_AS(Field::prime(4), InvalidArgument);
  const Field q = Field::rationals();
  CHECK((Coefficient(q, 1L) / Coefficient(q, 3L) * Coefficient(q, 3L)).is_one());
  CHECK_THROWS(Coefficient(f, 0L).inverse());
}

TEST_CASE("poly_arith examples") {
  auto rq = ring({"x", "y"}, 0);
  auto s = poly(rq, "x+y");
  CHECK(poly_arith(s, s, ArithOp::Mul) == poly(rq, "x^2 + 2*x*y + y^2"));
  auto r2 = ring({"x", "y"}, 2);
  auto s2 = poly(r2, "x+y");
  CHECK(poly_arith(s2, s2, ArithOp::Mul) == poly(r2, "x^2 + y^2"));
  std::mt19937_64 rng(1);
  auto r = ring({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    auto f = random_poly(rng, r, 4, 5);
    CHECK(poly_arith(f, f, ArithOp::Sub).is_zero());
  }
  CHECK_THROWS_AS(poly(r, "x") + poly(ring({"x", "w"}), "x"), RingMismatch);
}

TEST_CASE("compare_monomials examples") {
  const auto dr = MonomialOrder::degrevlex();
  // degrevlex in x,y,z: y^2 > xz
  CHECK(compare_monomials(Monomial{0, 2, 0}, Monomial{1, 0, 1}, dr) == std::strong_ordering::greater);
  // lex in x,y: x > y^3
  CHECK(compare_monomials(Monomial{1, 0}, Monomial{0, 3}, MonomialOrder::lex()) == std::strong_ordering::greater);
  CHECK(compare_monomials(Monomial{2, 1}, Monomial{2, 1}, dr) == std::strong_ordering::equal);
  CHECK(dr.refines_degree());
  CHECK_FALSE(MonomialOrder::lex().refines_degree());
}

TEST_CASE("constant_term examples") {
  auto r = ring({"x", "y"});
  CHECK(constant_term(poly(r, "x^2 + 3")) == Coefficient(r->field(), 3L));
  CHECK(constant_term(poly(r, "x + y")).is_zero());
  CHECK(constant_term(Polynomial(r)).is_zero());
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {101u, 2u, 0u}) {
    auto r = ring({"x", "y", "z"}, p);
    for (int k = 0; k < 50; ++k) {
      auto f = random_poly(rng, r, 3, 4), g = random_poly(rng, r, 3, 4), h = random_poly(rng, r, 3, 4);
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
    }
  }
}

TEST_CASE("property: canonicalization is idempotent") {
  std::mt19937_64 rng(8);
  auto r = ring({"x", "y", "z"});
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, r, 4, 6);
    CHECK(Polynomial::from_terms(r, f.terms()) == f);
    for (std::size_t i = 1; i < f.terms().size(); ++i)
      CHECK(r->order().greater(f.terms()[i - 1].mono, f.terms()[i].mono));
    for (const auto& t : f.terms()) CHECK_FALSE(t.coeff.is_zero());
  }
}

TEST_CASE("property: orders are total and well-founded on degree <= 6 in 3 variables") {
  std::vector<Monomial> ms;
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; a + b <= 6; ++b)
      for (unsigned c = 0; a + b + c <= 6; ++c) ms.push_back(Monomial{a, b, c});
  for (const auto& ord : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& u, const Monomial& v) { return ord.greater(v, u); });
    // a strict total order on a finite set: consecutive elements strictly increase and 1 is the minimum
    for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(ord.greater(sorted[i], sorted[i - 1]));
    CHECK(sorted.front().is_one());
    for (const auto& m : ms)
      for (std::size_t v = 0; v < 3; ++v) CHECK(ord.greater(m * Monomial::variable(3, v), m));
  }
}

TEST_CASE("polynomial text round trip") {
  auto r = ring({"x", "y"});
  auto f = poly(r, "x^2 - 3*x*y + (y+1)^2 - 1");
  CHECK(poly(r, f.to_string()) == f);
  auto rq = ring({"x", "y"}, 0);
  auto g = poly(rq, "1/2*x - 3/4*y^2");
  CHECK(poly(rq, g.to_string()) == g);
  CHECK_THROWS_AS(poly(r, "x/0"), ParseError);
  CHECK_THROWS_AS(poly(r, "x +"), ParseError);
}
