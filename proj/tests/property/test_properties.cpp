#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "gcmwb/dsl.hpp"
#include "gcmwb/graded.hpp"
#include "gcmwb/groebner.hpp"
#include "gcmwb/harness.hpp"
#include "gcmwb/ideal.hpp"
#include "gcmwb/invariants.hpp"
#include "gcmwb/rees.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

namespace {

constexpr int kFuzzIdeals = 240;

// 1..3 generators in 1..3 variables of degree <= 4; every other ideal gets pure
// powers so that a good share has finite colength.
Ideal random_ideal(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<Polynomial> gens;
  const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned j = 0; j < k; ++j) gens.push_back(random_poly(rng, r, 4, 1 + static_cast<unsigned>(rng() % 3)));
  if (rng() % 2)
    for (std::size_t v = 0; v < r->num_vars(); ++v)
      gens.push_back(Polynomial::monomial(r, Monomial::variable(r->num_vars(), v, 2 + static_cast<unsigned>(rng() % 3))));
  return Ideal(r, gens);
}

RingPtr random_ring(std::mt19937_64& rng, MonomialOrder ord = MonomialOrder::degrevlex()) {
  static const std::vector<std::string> names = {"x", "y", "z"};
  const std::size_t s = 1 + rng() % 3;
  return ring({names.begin(), names.begin() + static_cast<std::ptrdiff_t>(s)}, 101, ord);
}

}  // namespace

TEST_CASE("corpus: Hilbert function telescopes to colengths") {
  for (const auto& c : corpus())
    for (const auto& q : c.qs) {
      std::uint64_t sum = 0;
      for (unsigned n = 0; n <= 5; ++n) {
        sum += hilbert_g(c.ring, q, n);
        CHECK_MESSAGE(sum == *c.ring.colength(c.ring.power(c.ring.ideal(q.elements), n + 1)),
                      c.ring.name() << " " << q.to_string() << " n=" << n);
      }
    }
}

TEST_CASE("corpus: I-trace is monotone and I(Q,A) >= 0") {
  for (const auto& c : corpus())
    for (const auto& q : c.qs) {
      const auto est = invariant_ia(c.ring, q, 6);
      for (std::size_t k = 0; k < est.trace.size(); ++k) {
        CHECK(est.trace[k] >= 0);
        if (k) CHECK_MESSAGE(est.trace[k] >= est.trace[k - 1], c.ring.name() << " " << q.to_string());
      }
      CHECK(invariant_iq(c.ring, q).iq >= 0);
      if (c.gcm) CHECK(est.status == IAStatus::Stabilized);
    }
}

TEST_CASE("gCM corpus: I(Q, A/(x_1..x_i)) = I(Q, A)") {
  for (const auto& c : corpus()) {
    if (!c.gcm || c.ring.dimension() < 2) continue;
    for (const auto& q : c.qs) {
      const auto iq = invariant_iq(c.ring, q).iq;
      for (std::size_t i = 1; i < q.size(); ++i) {
        auto b = quotient_ring_by_subsystem(c.ring, q.prefix(i), 1);
        std::vector<Polynomial> rest(q.elements.begin() + static_cast<std::ptrdiff_t>(i), q.elements.end());
        CHECK_MESSAGE(invariant_iq(b, validate_parameter_system(b, rest)).iq == iq,
                      c.ring.name() << " " << q.to_string() << " i=" << i);
      }
    }
  }
}

TEST_CASE("gCM corpus: postulation consistency, sandwich and the main bound") {
  for (const auto& c : corpus()) {
    if (!c.gcm) continue;
    const auto d = c.ring.dimension();
    for (const auto& q : c.qs) {
      const auto ia = invariant_ia(c.ring, q, c.ring.config().n_max_ia);
      REQUIRE(ia.status == IAStatus::Stabilized);
      const auto cert = regularity_g(c.ring, q, std::optional<std::int64_t>(ia.value));
      const auto view = postulation(c.ring, q, cert.horizon);
      for (std::size_t n = static_cast<std::size_t>(cert.reg) + 1; n < view.hilbert.size(); ++n)
        CHECK(static_cast<std::int64_t>(view.hilbert[n]) == view.polynomial(static_cast<std::int64_t>(n)));
      CHECK(static_cast<std::int64_t>(view.postulation) <= cert.reg + 1);
      const auto rt = d == 1 ? principal_reltype(c.ring, q.elements[0]) : rees_presentation(c.ring, q).reltype;
      CHECK(static_cast<std::int64_t>(rt) - 1 <= cert.reg);
      CHECK(cert.reg <= *regularity_bound(ia.value, d));
      // same seed, same certificate
      const auto again = regularity_g(c.ring, q, std::optional<std::int64_t>(ia.value));
      REQUIRE(again.sequence.size() == cert.sequence.size());
      for (std::size_t k = 0; k < cert.sequence.size(); ++k)
        CHECK(again.sequence[k].element == cert.sequence[k].element);
    }
  }
}

TEST_CASE("identical seeds give byte-identical json reports") {
  for (const auto& c : corpus()) {
    auto fresh = make_local_ring(c.ring.presentation(), c.ring.config());
    const Grid g{3, 1};
    const auto a = emit_report(run_suite(c.ring, c.qs, g), ReportFormat::Json);
    const auto b = emit_report(run_suite(fresh, c.qs, g), ReportFormat::Json);
    CHECK_MESSAGE(a == b, c.ring.name());
  }
}

TEST_CASE("fuzz: Groebner membership soundness") {
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < kFuzzIdeals; ++k) {
    auto r = random_ring(rng);
    auto u = random_ideal(rng, r);
    const auto& gb = u.basis();
    for (const auto& g : u.generators()) CHECK(gb.normal_form(g).is_zero());
    // a random combination of generators lies in U; its normal form is reduced
    Polynomial f(r);
    for (const auto& g : u.generators()) f = f + g * random_poly(rng, r, 2, 2);
    CHECK(gb.contains(f));
    auto h = random_poly(rng, r, 4, 3);
    auto nf = gb.normal_form(h);
    for (const auto& t : nf.terms()) CHECK(gb.reducer_for(t.mono) == nullptr);
    CHECK(gb.contains(h - nf));
  }
}

TEST_CASE("fuzz: quotient and saturation laws") {
  std::mt19937_64 rng(20240602);
  for (int k = 0; k < kFuzzIdeals; ++k) {
    auto r = random_ring(rng);
    auto u = random_ideal(rng, r);
    auto f = random_poly(rng, r, 2, 2), g = random_poly(rng, r, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    const auto uf = ideal_quotient(u, f);
    CHECK(uf.contains(u));
    for (const auto& h : uf.generators()) CHECK(u.contains(h * f));
    CHECK(ideal_quotient(uf, g).equals(ideal_quotient(u, f * g)));
    const auto m = Ideal::maximal_power(r, 1);
    const auto s = saturate(u, m);
    const auto s2 = saturate(s.ideal, m);
    CHECK(s2.exponent == 0);
    CHECK(s2.ideal.equals(s.ideal));
    CHECK(s.ideal.contains(u));
  }
}

TEST_CASE("fuzz: finite colengths do not depend on the order") {
  std::mt19937_64 rng(20240603);
  int finite = 0;
  for (int k = 0; k < kFuzzIdeals; ++k) {
    auto r = random_ring(rng);
    auto u = random_ideal(rng, r);
    const auto a = kdim_quotient(u);
    const auto rl = r->with_order(MonomialOrder::lex());
    std::vector<std::size_t> ident(r->num_vars());
    for (std::size_t v = 0; v < ident.size(); ++v) ident[v] = v;
    const auto b = kdim_quotient(change_ring(u, rl, ident));
    CHECK(a == b);
    if (a) {
      ++finite;
      CHECK(affine_hilbert(u, *a) == *a);
    }
  }
  CHECK(finite >= kFuzzIdeals / 3);
}

TEST_CASE("fuzz: the parser is total") {
  std::mt19937_64 rng(20240604);
  const std::string seed_text = "ring A = F101[x,y]/(x^2, x*y^3); params Q = (y, x+y^2); run suite with n=3, m=2;";
  const std::string alphabet = "ringparamsuF0123456789[](),;=+-*^/ xyz#\n\t\"QQk";
  int ok = 0, err = 0;
  for (int k = 0; k < 3000; ++k) {
    std::string t = seed_text;
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % (t.size() + 1);
      switch (rng() % 3) {
        case 0:
          t.insert(pos, 1, alphabet[rng() % alphabet.size()]);
          break;
        case 1:
          if (pos < t.size()) t.erase(pos, 1);
          break;
        default:
          if (pos < t.size()) t[pos] = static_cast<char>(rng() % 256);
      }
    }
    try {
      auto spec = parse_job(t);
      ++ok;
      CHECK(parse_job(serialize_job(spec)) == spec);
    } catch (const ParseError& e) {
      ++err;
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
  for (int k = 0; k < 2000; ++k) {
    std::string t(rng() % 64, ' ');
    for (auto& ch : t) ch = static_cast<char>(rng() % 256);
    try {
      parse_job(t);
    } catch (const ParseError&) {
    }
  }
  CHECK(ok > 0);
  CHECK(err > 0);
}
