#include "doctest.h"
#include "gcmwb/error.hpp"
#include "gcmwb/groebner.hpp"
#include "gcmwb/ideal.hpp"
#include "helpers.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

TEST_CASE("groebner examples") {
  auto r = ring({"x", "y"});
  auto g = groebner(r, polys(r, {"x^2", "x*y^3"}));
  CHECK(g.generators().size() == 2);
  CHECK(Ideal(r, g.generators()).equals(ideal(r, {"x^2", "x*y^3"})));
  auto lx = ring({"y", "x"}, 101, MonomialOrder::lex());
  auto g2 = groebner(lx, polys(lx, {"y - x^2", "x*y"}));
  bool has_x3 = false;
  for (const auto& p : g2.generators()) has_x3 = has_x3 || p == poly(lx, "x^3");
  CHECK(has_x3);
  CHECK(groebner(r, polys(r, {"1"})).is_unit());
  CHECK(groebner(r, {}).is_zero());
}

TEST_CASE("normal_form examples") {
  auto r = ring({"x", "y"});
  auto g = groebner(r, polys(r, {"x^2", "x*y^3"}));
  CHECK(normal_form(poly(r, "x^2"), g).is_zero());
  CHECK(normal_form(poly(r, "x"), groebner(r, polys(r, {"x^2"}))) == poly(r, "x"));
  CHECK(normal_form(poly(r, "x^2*y^3 + y"), g) == poly(r, "y"));
}

TEST_CASE("ideal_combine examples") {
  auto r = ring({"x", "y"});
  CHECK(product(ideal(r, {"x"}), ideal(r, {"y"})).equals(ideal(r, {"x*y"})));
  CHECK(power(ideal(r, {"x", "y"}), 2).equals(ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(sum(ideal(r, {"x^2"}), ideal(r, {"y"})).equals(ideal(r, {"x^2", "y"})));
  CHECK(power(ideal(r, {"x"}), 0).is_unit());
}

TEST_CASE("ideal_quotient examples") {
  auto r = ring({"x", "y"});
  for (unsigned k = 1; k <= 4; ++k) {
    const std::string yr = "y^" + std::to_string(k);
    auto u = ideal(r, {"x^2", "x*" + yr});
    CHECK(ideal_quotient(u, poly(r, "x")).equals(ideal(r, {"x", yr})));
    CHECK(ideal_quotient_by_elimination(u, poly(r, "x")).equals(ideal(r, {"x", yr})));
  }
  CHECK(ideal_quotient(ideal(r, {"x^2"}), poly(r, "y")).equals(ideal(r, {"x^2"})));
  auto u = ideal(r, {"x^2 + y^3", "x*y"});
  CHECK(ideal_quotient(u, poly(r, "1")).equals(u));
}

TEST_CASE("saturate examples") {
  auto r = ring({"x", "y"});
  for (unsigned k = 1; k <= 4; ++k) {
    auto s = saturate(ideal(r, {"x^2", "x*y^" + std::to_string(k)}), ideal(r, {"x", "y"}));
    CHECK(s.ideal.equals(ideal(r, {"x"})));
    CHECK(s.exponent == k);
  }
  auto prime = saturate(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(prime.ideal.equals(ideal(r, {"x"})));
  CHECK(prime.exponent == 0);
  auto s = saturate(ideal(r, {"x*y"}), ideal(r, {"x"}));
  CHECK(s.ideal.equals(ideal(r, {"y"})));
  CHECK(s.exponent == 1);
  CHECK_THROWS_AS(saturate(ideal(r, {"x"}), Ideal::zero(r)), InvalidArgument);
}

TEST_CASE("eliminate examples") {
  auto r = ring({"t", "x", "y"});
  CHECK(eliminate(ideal(r, {"t - x", "y - t^2"}), {0}).equals(ideal(r, {"y - x^2"})));
  auto r2 = ring({"x", "y"});
  CHECK(eliminate(ideal(r2, {"x"}), {1}).equals(ideal(r2, {"x"})));
  CHECK(eliminate(ideal(r, {"t*x - 1", "y"}), {0}).equals(ideal(r, {"y"})));
}

TEST_CASE("kdim_quotient examples") {
  auto r = ring({"x", "y"});
  CHECK(kdim_quotient(ideal(r, {"x^2", "x*y^3", "y"})) == 2u);
  CHECK(kdim_quotient(ideal(ring({"x"}), {"x^5"})) == 5u);
  CHECK_FALSE(kdim_quotient(ideal(r, {"x^2"})).has_value());
}

TEST_CASE("affine_hilbert examples") {
  auto r = ring({"x", "y"});
  CHECK(affine_hilbert(ideal(r, {"x^2", "x*y", "y^2"}), 5) == 3);
  CHECK(affine_hilbert(Ideal::zero(r), 2) == 6);
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned t = k + 1; t <= k + 4; ++t)
      CHECK(affine_hilbert(ideal(r, {"x^2", "x*y^" + std::to_string(k)}), t) == (t + 1) + k);
  CHECK_THROWS_AS(affine_hilbert(ideal(r, {"x"}), 2, MonomialOrder::lex()), InvalidArgument);
}

TEST_CASE("contained_in_max_ideal examples") {
  auto r = ring({"x", "y"});
  CHECK(contained_in_max_ideal(ideal(r, {"x^2", "y"})));
  CHECK_FALSE(contained_in_max_ideal(ideal(r, {"x - 1"})));
  CHECK_FALSE(contained_in_max_ideal(ideal(r, {"1"})));
}

TEST_CASE("affine_hilbert is monotone with limit kdim_quotient") {
  auto r = ring({"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2", "y^3", "z^2", "x*y*z"}, {"x^2 - y*z", "y^2", "z^3"}, {"x*y", "y*z"}}) {
    auto u = ideal(r, gens);
    const auto k = kdim_quotient(u);
    std::uint64_t prev = 0;
    for (unsigned t = 0; t <= 12; ++t) {
      const auto h = affine_hilbert(u, t);
      CHECK(h >= prev);
      prev = h;
    }
    if (k) CHECK(prev == *k);
    else CHECK(affine_hilbert(u, 13) > prev);
  }
}
