// Acceptance criteria 1-9: one PASS/FAIL line each, with timings.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "gcmwb/graded.hpp"
#include "gcmwb/groebner.hpp"
#include "gcmwb/harness.hpp"
#include "gcmwb/ideal.hpp"
#include "gcmwb/invariants.hpp"
#include "gcmwb/rees.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

namespace {

// Pinned limits. Every numeric comparison below is exact (zero tolerance).
constexpr double kCriterion1Seconds = 60.0;
constexpr double kCriterion4Seconds = 600.0;
constexpr int kFuzzIdeals = 200;
constexpr unsigned kTraceLength = 6;
constexpr unsigned kFamilyLength = 5;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

unsigned reltype_of(const LocalRing& a, const ParameterSystem& q) {
  return a.dimension() == 1 ? principal_reltype(a, q.elements[0]) : rees_presentation(a, q).reltype;
}

const std::vector<unsigned> kRs = {1, 2, 3, 4, 6};

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> rows;
  for (unsigned r : kRs) {
    auto a = example_ring(r);
    auto q = sop(a, {"y"});
    const auto ia = invariant_ia(a, q, a.config().n_max_ia);
    const auto cert = regularity_g(a, q, std::optional<std::int64_t>(ia.value));
    const auto view = postulation(a, q, cert.horizon);
    const auto rt = rees_presentation(a, q).reltype;
    const std::string tag = "r=" + std::to_string(r);
    o.require(ia.status == IAStatus::Stabilized && ia.value == r, tag + ": I(A)=" + std::to_string(ia.value));
    o.require(cert.reg == static_cast<std::int64_t>(r) - 1, tag + ": reg=" + std::to_string(cert.reg));
    o.require(rt == r, tag + ": reltype=" + std::to_string(rt));
    o.require(view.postulation == r, tag + ": p=" + std::to_string(view.postulation));
    rows.push_back(tag + " I=" + std::to_string(ia.value) + " reg=" + std::to_string(cert.reg) +
                   " reltype=" + std::to_string(rt) + " p=" + std::to_string(view.postulation));
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < kCriterion1Seconds, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << join(rows);
}

void criterion2(Outcome& o) {
  for (unsigned r : kRs) {
    auto a = example_ring(r);
    const auto rep = run_suite(a, {sop(a, {"y"})}, Grid{5, 2});
    for (const char* id : {"Thm2.5", "Cor2.6", "Cor2.7"}) {
      bool seen = false;
      for (const auto& e : rep.entries)
        if (e.bound == id) {
          seen = true;
          o.require(e.verdict == Verdict::Pass && e.lhs == e.rhs,
                    "r=" + std::to_string(r) + " " + id + ": " + std::to_string(e.lhs) + " vs " + std::to_string(e.rhs));
        }
      o.require(seen, "r=" + std::to_string(r) + " no " + id + " entry");
    }
  }
  if (o.pass) o.detail << "lhs = rhs for Thm2.5, Cor2.6, Cor2.7 at r in {1,2,3,4,6}";
}

void criterion3(Outcome& o) {
  for (auto [name, vars, sops_] :
       {std::tuple{"F101[x,y]", std::vector<std::string>{"x", "y"}, regular_sops_2()},
        std::tuple{"F101[x,y,z]", std::vector<std::string>{"x", "y", "z"}, regular_sops_3()}}) {
    auto a = local(name, vars, {});
    const auto qs = sops(a, sops_);
    o.require(qs.size() >= 5, std::string(name) + ": fewer than 5 parameter ideals");
    const auto rep = run_suite(a, qs, Grid{5, 2});
    o.require(rep.ia.status == IAStatus::Stabilized && rep.ia.value == 0, std::string(name) + ": I(A) != 0");
    for (const auto& q : rep.queries) {
      o.require(q.reg == 0, std::string(name) + " " + q.q + ": reg");
      o.require(q.postulation == 0, std::string(name) + " " + q.q + ": p");
      o.require(q.reltype == 1, std::string(name) + " " + q.q + ": reltype");
      o.require(q.iq == 0, std::string(name) + " " + q.q + ": I(Q,A)");
    }
    for (const auto& e : rep.entries)
      o.require(e.verdict == Verdict::Pass, std::string(name) + " " + e.bound + " " + e.q + ": " + to_string(e.verdict));
    if (o.pass) o.detail << name << " " << rep.summary.pass << " PASS over " << qs.size() << " ideals; ";
  }
}

void criterion4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto a = two_planes();
  const auto qs = sops(a, two_planes_sops());
  const auto rep = run_suite(a, qs, Grid{3, 2});
  o.require(rep.ia.status == IAStatus::Stabilized && rep.ia.value == 1, "I(A) = " + std::to_string(rep.ia.value));
  o.require(rep.ia.trace.size() >= 2 && rep.ia.trace[1] == 1, "trace not at 1 by n = 2: " + join(rep.ia.trace));
  std::vector<std::string> rows;
  for (const auto& q : rep.queries) {
    o.require(q.reg && *q.reg <= 2, q.q + ": reg");
    o.require(q.reltype && *q.reltype <= 3, q.q + ": reltype");
    o.require(q.postulation && *q.postulation <= 3, q.q + ": p");
    o.require(q.reg && q.reltype && *q.reltype - 1 <= *q.reg, q.q + ": sandwich");
    rows.push_back("reg=" + std::to_string(q.reg.value_or(-1)) + "/rt=" + std::to_string(q.reltype.value_or(-1)) +
                   "/p=" + std::to_string(q.postulation.value_or(-1)));
  }
  unsigned thm12 = 0, cor = 0;
  for (const auto& e : rep.entries) {
    if (e.bound == "Thm1.2" && e.n && *e.n <= 2) {
      ++thm12;
      o.require(e.verdict == Verdict::Pass && e.rhs == 1, "Thm1.2 " + e.q + " n=" + std::to_string(*e.n));
    }
    if (e.bound == "Cor1.3" || e.bound == "Cor1.4") {
      ++cor;
      o.require(e.verdict == Verdict::Pass, e.bound + " " + e.q);
    }
  }
  o.require(thm12 == 3 * qs.size(), "Thm1.2 entries: " + std::to_string(thm12));
  o.require(cor == 2 * 4 * 2 * qs.size(), "Cor1.3/1.4 entries: " + std::to_string(cor));
  o.require(rep.summary.fail == 0 && rep.summary.error == 0, "suite has FAIL or ERROR entries");
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < kCriterion4Seconds, "runtime " + std::to_string(s) + " s");
  if (o.pass)
    o.detail << "I(A)=1 trace " << join(rep.ia.trace) << "; " << join(rows) << "; " << thm12 << " Thm1.2 and " << cor
             << " Cor1.3/1.4 entries pass";
}

void criterion5(Outcome& o) {
  unsigned checked = 0, vacuous = 0;
  for (const auto& c : corpus()) {
    for (const auto& q : c.qs) {
      const auto ia = invariant_ia(c.ring, q, c.ring.config().n_max_ia);
      if (ia.status != IAStatus::Stabilized) {
        // I(A) is infinite: the right side is infinite and the inequality is vacuous
        o.require(!c.gcm, c.ring.name() + ": I(A) not certified on a gCM ring");
        ++vacuous;
        continue;
      }
      const auto e = multiplicity(c.ring, q);
      for (unsigned n = 0; n <= 5; ++n) {
        const auto entry = check_hilbert_bound(c.ring, q, n, e, ia.value);
        ++checked;
        o.require(entry.verdict == Verdict::Pass, c.ring.name() + " " + q.to_string() + " n=" + std::to_string(n) + ": " +
                                                      std::to_string(entry.lhs) + " > " + std::to_string(entry.rhs));
      }
    }
  }
  if (o.pass) o.detail << checked << " entries pass; " << vacuous << " (ring, Q) with I(A) infinite (vacuous)";
}

void criterion6(Outcome& o) {
  auto a = two_planes();
  unsigned lemma = 0, thm = 0;
  for (const auto& q : sops(a, two_planes_sops())) {
    const auto cert = regularity_g(a, q, std::optional<std::int64_t>(1));
    const auto view = postulation(a, q, cert.horizon);
    std::vector<unsigned> ns;
    for (unsigned n = static_cast<unsigned>(view.postulation); n <= view.postulation + 2; ++n) ns.push_back(n);
    for (const auto& e : mumford_gap_check(a, q, cert, view, ns, 1)) {
      if (e.bound == "Lemma2.4") ++lemma;
      if (e.bound == "Thm2.2") ++thm;
      o.require(e.verdict == Verdict::Pass, e.bound + " " + e.q + " n=" + std::to_string(e.n.value_or(-1)) + ": " +
                                                to_string(e.verdict) + " " + e.note);
    }
  }
  o.require(lemma >= 3 * 5, "Lemma2.4 entries: " + std::to_string(lemma));
  if (o.pass) o.detail << lemma << " Lemma2.4 and " << thm << " Thm2.2 entries pass for n in p..p+2";
}

std::vector<std::int64_t> exponents(const FamilyTrace& tr) {
  std::vector<std::int64_t> v;
  for (const auto& s : tr.samples) v.push_back(s.colon_exponent ? static_cast<std::int64_t>(*s.colon_exponent) : -1);
  return v;
}

void criterion7(Outcome& o) {
  auto c = line_and_plane();
  const auto base = sop(c, {"x-y", "z"});
  const auto ia = invariant_ia(c, base, kTraceLength);
  bool rising = ia.trace.size() == kTraceLength;
  for (std::size_t k = 1; k < ia.trace.size(); ++k) rising = rising && ia.trace[k] > ia.trace[k - 1];
  o.require(ia.status == IAStatus::Divergent && rising, "I-trace " + join(ia.trace) + " " + to_string(ia.status));

  SopFamily fam{"(x - y^t, z)", {}};
  for (unsigned t = 1; t <= kFamilyLength; ++t) fam.members.push_back(sop(c, {"x-y^" + std::to_string(t), "z"}));
  const auto rep = theorem28_experiment(c, {fam}, kFamilyLength);
  const auto ex = exponents(rep.families[0]);
  bool growing = true;
  for (std::size_t k = 1; k < ex.size(); ++k) growing = growing && ex[k] > ex[k - 1];
  o.require(growing, "family (x - y^t, z) colon exponents " + join(ex) + " do not grow");
  o.require(rep.verdict.rfind("not gCM", 0) == 0, "family verdict '" + rep.verdict + "'");
  if (o.pass) o.detail << "trace " << join(ia.trace) << " divergent; exponents " << join(ex) << "; " << rep.verdict;
  else o.detail << " (I-trace " << join(ia.trace) << " divergent)";

  // Evidence beyond the literal family: families on which growth does occur.
  SopFamily power{"((x - y)^t, z^t)", {}}, witness{"(z + x^t, y + x^t)", {}};
  for (unsigned t = 1; t <= kFamilyLength; ++t) {
    const auto ts = std::to_string(t);
    power.members.push_back(sop(c, {"(x-y)^" + ts, "z^" + ts}));
    witness.members.push_back(sop(c, {"z+x^" + ts, "y+x^" + ts}));
  }
  const auto extra = theorem28_experiment(c, {power, witness}, 2 * kFamilyLength);
  std::cout << "  criterion 7 evidence: " << power.label << " exponents " << join(exponents(extra.families[0]))
            << "; " << witness.label << " exponents " << join(exponents(extra.families[1])) << "; verdict '"
            << extra.verdict << "'\n";
}

void criterion8(Outcome& o) {
  unsigned checks = 0;
  for (const auto& c : corpus()) {
    const auto& a = c.ring;
    for (const auto& q : c.qs) {
      const std::string tag = a.name() + " " + q.to_string();
      std::uint64_t sum = 0;
      for (unsigned n = 0; n <= 5; ++n) {
        sum += hilbert_g(a, q, n);
        o.require(sum == *a.colength(a.power(a.ideal(q.elements), n + 1)), tag + ": telescoping at n=" + std::to_string(n));
        ++checks;
      }
      const auto ia = invariant_ia(a, q, kTraceLength);
      for (std::size_t k = 1; k < ia.trace.size(); ++k) o.require(ia.trace[k] >= ia.trace[k - 1], tag + ": trace");
      const auto iq = invariant_iq(a, q).iq;
      o.require(iq >= 0, tag + ": I(Q,A) < 0");
      checks += 2;
      if (!c.gcm) continue;
      for (std::size_t i = 1; i < q.size(); ++i) {
        auto b = quotient_ring_by_subsystem(a, q.prefix(i), 1);
        std::vector<Polynomial> rest(q.elements.begin() + static_cast<std::ptrdiff_t>(i), q.elements.end());
        o.require(invariant_iq(b, validate_parameter_system(b, rest)).iq == iq, tag + ": quotient invariance i=" + std::to_string(i));
        ++checks;
      }
      const auto full = invariant_ia(a, q, a.config().n_max_ia);
      const auto cert = regularity_g(a, q, std::optional<std::int64_t>(full.value));
      const auto view = postulation(a, q, cert.horizon);
      for (std::size_t n = static_cast<std::size_t>(cert.reg) + 1; n < view.hilbert.size(); ++n) {
        o.require(static_cast<std::int64_t>(view.hilbert[n]) == view.polynomial(static_cast<std::int64_t>(n)),
                  tag + ": h(n) != P(n) at n=" + std::to_string(n));
        ++checks;
      }
    }
    auto fresh = make_local_ring(a.presentation(), a.config());
    const auto j1 = emit_report(run_suite(a, c.qs, Grid{3, 1}), ReportFormat::Json);
    const auto j2 = emit_report(run_suite(fresh, c.qs, Grid{3, 1}), ReportFormat::Json);
    o.require(j1 == j2, a.name() + ": json reports differ");
    ++checks;
  }
  if (o.pass) o.detail << checks << " checks over " << corpus().size() << " rings";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(99);
  static const std::vector<std::string> names = {"x", "y", "z"};
  unsigned finite = 0;
  for (int k = 0; k < kFuzzIdeals; ++k) {
    const std::size_t s = 1 + rng() % 3;
    auto r = ring({names.begin(), names.begin() + static_cast<std::ptrdiff_t>(s)});
    std::vector<Polynomial> gens;
    for (unsigned j = 0, n = 1 + static_cast<unsigned>(rng() % 3); j < n; ++j)
      gens.push_back(random_poly(rng, r, 4, 1 + static_cast<unsigned>(rng() % 3)));
    if (rng() % 2)
      for (std::size_t v = 0; v < s; ++v)
        gens.push_back(Polynomial::monomial(r, Monomial::variable(s, v, 2 + static_cast<unsigned>(rng() % 3))));
    Ideal u(r, gens);
    const std::string tag = "ideal #" + std::to_string(k) + " " + u.to_string();
    for (const auto& g : gens) o.require(u.basis().normal_form(g).is_zero(), tag + ": membership");
    auto f = random_poly(rng, r, 2, 2), g = random_poly(rng, r, 2, 2);
    if (!f.is_zero() && !g.is_zero()) {
      const auto uf = ideal_quotient(u, f);
      o.require(uf.contains(u), tag + ": U not in U:f");
      o.require(ideal_quotient(uf, g).equals(ideal_quotient(u, f * g)), tag + ": (U:f):g != U:fg");
    }
    const auto m = Ideal::maximal_power(r, 1);
    const auto sat = saturate(u, m);
    const auto sat2 = saturate(sat.ideal, m);
    o.require(sat2.exponent == 0 && sat2.ideal.equals(sat.ideal), tag + ": saturation not idempotent");
    std::vector<std::size_t> ident(s);
    for (std::size_t v = 0; v < s; ++v) ident[v] = v;
    const auto a = kdim_quotient(u);
    const auto b = kdim_quotient(change_ring(u, r->with_order(MonomialOrder::lex()), ident));
    o.require(a == b, tag + ": colength depends on the order");
    if (a) ++finite;
  }
  if (o.pass) o.detail << kFuzzIdeals << " random ideals (" << finite << " of finite colength)";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> xfail;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--xfail") xfail.insert(std::atoi(argv[++i]));

  const std::vector<std::function<void(Outcome&)>> criteria = {criterion1, criterion2, criterion3,
                                                               criterion4, criterion5, criterion6,
                                                               criterion7, criterion8, criterion9};
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k](o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string tag;
    if (!o.pass && xfail.count(id)) tag = " [expected failure, see the decisions ledger]";
    if (o.pass && xfail.count(id)) tag = " [unexpected pass]";
    if (o.pass == static_cast<bool>(xfail.count(id))) ++unexpected;
    std::printf("criterion %d: %s (%.2f s) %s%s\n", id, o.pass ? "PASS" : "FAIL", s, o.detail.str().c_str(),
                tag.c_str());
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
