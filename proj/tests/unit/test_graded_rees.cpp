#include "doctest.h"
#include "gcmwb/error.hpp"
#include "gcmwb/graded.hpp"
#include "gcmwb/hilbert.hpp"
#include "gcmwb/ideal.hpp"
#include "gcmwb/rees.hpp"
#include "helpers.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

TEST_CASE("hilbert_g examples") {
  for (unsigned r : {1u, 3u, 4u}) {
    auto a = example_ring(r);
    auto q = sop(a, {"y"});
    for (unsigned n = 0; n <= r + 3; ++n) CHECK(hilbert_g(a, q, n) == (n < r ? 2u : 1u));
  }
  auto k2 = local("k2", {"x", "y"}, {});
  auto m = sop(k2, {"x", "y"});
  for (unsigned n = 0; n <= 5; ++n) CHECK(hilbert_g(k2, m, n) == n + 1);
  auto k3 = local("k3", {"x", "y", "z"}, {});
  auto q = sop(k3, {"x^2", "y", "z+x"});
  for (unsigned n = 0; n <= 4; ++n) CHECK(hilbert_g(k3, q, n) == static_cast<std::uint64_t>(binomial(n + 2, 2) * 2));
}

TEST_CASE("postulation examples") {
  for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
    auto a = example_ring(r);
    auto view = postulation(a, sop(a, {"y"}), *regularity_bound(r, 1));
    CHECK(view.postulation == r);
    CHECK(view.coeffs == std::vector<std::int64_t>{1});
    CHECK(view.polynomial(r + 5) == 1);
  }
  auto k2 = local("k2", {"x", "y"}, {});
  CHECK(postulation(k2, sop(k2, {"x^2", "y"}), 0).postulation == 0);
  auto tp = two_planes();
  auto view = postulation(tp, sop(tp, {"x-u", "y-v"}), 2);
  CHECK(view.postulation <= 2);
  CHECK(view.polynomial(4) == 11);  // h(n) = 2n + 3
}

TEST_CASE("plus_torsion_length examples") {
  auto k2 = local("k2", {"x", "y"}, {});
  auto qk = sop(k2, {"x", "y"});
  for (unsigned n = 0; n <= 3; ++n) CHECK(plus_torsion_length(k2, qk, {}, n) == 0);
  for (unsigned r : {1u, 2u, 3u, 4u}) {
    auto a = example_ring(r);
    auto q = sop(a, {"y"});
    for (unsigned n = 0; n <= r + 3; ++n) CHECK((plus_torsion_length(a, q, {}, n) > 0) == (n + 1 <= r));
  }
}

TEST_CASE("filter_regular_initial_form examples") {
  for (unsigned r : {1u, 3u}) {
    auto a = example_ring(r);
    auto q = sop(a, {"y"});
    auto fr = filter_regular_initial_form(a, q, {}, r - 1, 11);
    CHECK(fr.element == poly(a.ring(), "y"));
    for (unsigned n = r; n <= r + 3; ++n) CHECK(initial_form_annihilator_length(a, q, {}, fr.element, n) == 0);
    CHECK(initial_form_annihilator_length(a, q, {}, fr.element, r - 1) > 0);
  }
  auto k2 = local("k2", {"x", "y"}, {});
  auto fr = filter_regular_initial_form(k2, sop(k2, {"x", "y"}), {}, 0, 3);
  CHECK(fr.attempts == 1);
  auto tp = two_planes();
  auto q = sop(tp, {"x-u", "y-v"});
  auto a1 = filter_regular_initial_form(tp, q, {}, 2, 42), a2 = filter_regular_initial_form(tp, q, {}, 2, 42);
  CHECK(a1.element == a2.element);
  CHECK(a1.window_begin == 3);
  CHECK(a1.window_end == 3 + tp.config().filter_slack - 1);
}

TEST_CASE("regularity_g examples") {
  for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
    auto a = example_ring(r);
    auto cert = regularity_g(a, sop(a, {"y"}), std::optional<std::int64_t>(r));
    CHECK(cert.reg == static_cast<std::int64_t>(r) - 1);
  }
  auto k3 = local("k3", {"x", "y", "z"}, {});
  CHECK(regularity_g(k3, sop(k3, {"x", "y^2", "z+x"}), std::optional<std::int64_t>(0)).reg == 0);
  auto tp = two_planes();
  auto q = sop(tp, {"x-u", "y-v"});
  auto cert = regularity_g(tp, q, std::optional<std::int64_t>(1));
  CHECK(cert.reg <= 2);
  CHECK(static_cast<std::int64_t>(rees_presentation(tp, q).reltype) - 1 <= cert.reg);
  auto c = line_and_plane();
  CHECK_THROWS_AS(regularity_g(c, sop(c, {"x-y", "z"}), std::nullopt), InvalidArgument);
}

TEST_CASE("rees_presentation examples") {
  auto k2 = local("k2", {"x", "y"}, {});
  auto rp = rees_presentation(k2, sop(k2, {"x", "y"}));
  CHECK(rp.reltype == 1);
  Ideal rel(rp.ring, rp.ideal);
  CHECK(rel.contains(poly(rp.ring, "x*T2 - y*T1")));
  for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
    auto a = example_ring(r);
    auto q = sop(a, {"y"});
    auto p = rees_presentation(a, q);
    CHECK(p.reltype == r);
    CHECK(principal_reltype(a, q.elements.front()) == r);
    // x*y^{r-j}*T^j lies in the relation ideal for j = 1..r
    Ideal rr(p.ring, p.ideal);
    for (unsigned j = 1; j <= r; ++j)
      CHECK(rr.contains(poly(p.ring, "x*y^" + std::to_string(r - j) + "*T1^" + std::to_string(j))));
  }
  auto tp = two_planes();
  CHECK(rees_presentation(tp, sop(tp, {"x-u", "y-v"})).reltype <= 3);
}

TEST_CASE("mumford_gap_check examples") {
  auto k2 = local("k2", {"x", "y"}, {});
  auto qk = sop(k2, {"x", "y"});
  auto ck = regularity_g(k2, qk, std::optional<std::int64_t>(0));
  auto vk = postulation(k2, qk, ck.horizon);
  for (const auto& e : mumford_gap_check(k2, qk, ck, vk, {0, 1, 2}, 0)) {
    CHECK(e.verdict == Verdict::Pass);
    if (e.bound == "Lemma2.4") CHECK(e.lhs == 0);
  }
  auto tp = two_planes();
  auto q = sop(tp, {"x-u", "y-v"});
  auto cert = regularity_g(tp, q, std::optional<std::int64_t>(1));
  auto view = postulation(tp, q, cert.horizon);
  std::vector<unsigned> ns;
  for (unsigned n = view.postulation; n <= view.postulation + 2; ++n) ns.push_back(n);
  auto entries = mumford_gap_check(tp, q, cert, view, ns, 1);
  CHECK_FALSE(entries.empty());
  for (const auto& e : entries) CHECK(e.verdict == Verdict::Pass);
}
