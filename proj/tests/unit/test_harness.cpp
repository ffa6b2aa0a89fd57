#include <algorithm>

#include "doctest.h"
#include "gcmwb/error.hpp"
#include "gcmwb/harness.hpp"
#include "helpers.hpp"

using namespace gcmwb;
using namespace gcmwb::test;

namespace {

const BoundEntry* find(const BoundReport& rep, const std::string& id) {
  for (const auto& e : rep.entries)
    if (e.bound == id) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("run_suite on E_3") {
  auto a = example_ring(3);
  auto rep = run_suite(a, {sop(a, {"y"})}, Grid{5, 2});
  CHECK(rep.gcm_verified);
  CHECK(rep.ia.value == 3);
  CHECK(rep.summary.fail == 0);
  CHECK(rep.summary.error == 0);
  CHECK(rep.summary.pass > 0);
  const auto* thm = find(rep, "Thm2.5");
  REQUIRE(thm);
  CHECK(thm->lhs == 2);
  CHECK(thm->rhs == 2);
  for (const char* id : {"Thm1.2", "Cor1.3", "Cor1.4", "Lemma2.4", "Thm2.2"}) {
    const auto* e = find(rep, id);
    REQUIRE(e);
    CHECK(e->verdict == Verdict::Skipped);
  }
  const auto text = emit_report(rep, ReportFormat::Text);
  CHECK(text.find("Thm2.5: 2 ≤ 2 PASS (sharp)") != std::string::npos);
  CHECK(text.rfind(kReportVersion, 0) == 0);
}

TEST_CASE("run_suite on regular and two-planes rings") {
  auto k2 = local("k2", {"x", "y"}, {});
  auto rk = run_suite(k2, {sop(k2, {"x^2", "y"})}, Grid{3, 2});
  CHECK(rk.summary.fail == 0);
  CHECK(rk.summary.error == 0);
  for (const auto& e : rk.entries)
    if (e.verdict == Verdict::Pass && e.bound != "Lemma1.1" && e.bound != "Cor2.6" && e.bound != "Cor2.7")
      CHECK(e.lhs == 0);
  auto tp = two_planes();
  auto rep = run_suite(tp, {sop(tp, {"x-u", "y-v"})}, Grid{3, 2});
  CHECK(rep.summary.fail == 0);
  CHECK(rep.summary.error == 0);
  CHECK(find(rep, "Thm2.5")->rhs == 2);
  CHECK(find(rep, "Cor2.7")->rhs == 3);
  CHECK_THROWS_AS(run_suite(tp, {}, Grid{}), InvalidArgument);
}

TEST_CASE("run_suite skips bounds on a ring that is not gCM") {
  auto c = line_and_plane();
  auto rep = run_suite(c, {sop(c, {"x-y", "z"})}, Grid{2, 1});
  CHECK_FALSE(rep.gcm_verified);
  CHECK(rep.ia.status == IAStatus::Divergent);
  CHECK(rep.summary.pass == 0);
  CHECK(rep.summary.skipped == rep.entries.size());
}

TEST_CASE("report serialization") {
  auto a = example_ring(2);
  auto rep = run_suite(a, {sop(a, {"y"}), sop(a, {"y+x"})}, Grid{3, 1});
  const auto js = emit_report(rep, ReportFormat::Json);
  CHECK(parse_report_json(js) == rep);
  CHECK(emit_report(parse_report_json(js), ReportFormat::Json) == js);
  const auto csv = emit_report(rep, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rep.entries.size()) + 2);
  BoundReport empty;
  const auto ej = emit_report(empty, ReportFormat::Json);
  CHECK(parse_report_json(ej) == empty);
  CHECK(emit_report(empty, ReportFormat::Csv).find("bound,Q,n,m,lhs,rhs,verdict,note") != std::string::npos);
  CHECK_FALSE(emit_report(empty, ReportFormat::Text).empty());
  // identical inputs give byte-identical json
  CHECK(emit_report(run_suite(a, {sop(a, {"y"}), sop(a, {"y+x"})}, Grid{3, 1}), ReportFormat::Json) == js);
}

TEST_CASE("theorem28_experiment verdicts") {
  for (unsigned r : {2u, 3u}) {
    auto a = example_ring(r);
    auto rep = theorem28_experiment(a, default_families(a, sop(a, {"y"}), 6), 40);
    CHECK(rep.verdict == "gCM-consistent (uniformly bounded)");
    CHECK(rep.r_obs == r);
  }
  auto tp = two_planes();
  auto rt = theorem28_experiment(tp, default_families(tp, sop(tp, {"x-u", "y-v"}), 5), 40);
  CHECK(rt.verdict == "gCM-consistent (uniformly bounded)");
  auto c = line_and_plane();
  auto rc = theorem28_experiment(c, default_families(c, sop(c, {"x-y", "z"}), 5), 40);
  CHECK(rc.verdict == "not gCM (growth detected)");
  CHECK_FALSE(rc.witness.empty());
  CHECK_THROWS_AS(theorem28_experiment(c, {}, 0), InvalidArgument);
}
