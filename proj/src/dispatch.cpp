#include "gcmwb/dispatch.hpp"

#include <algorithm>
#include <sstream>

#include "gcmwb/graded.hpp"
#include "gcmwb/invariants.hpp"
#include "gcmwb/rees.hpp"
#include "json.hpp"

namespace gcmwb {

using json = nlohmann::ordered_json;

namespace {

std::string error_kind(const Error& ex) {
  if (dynamic_cast<const CapExceeded*>(&ex)) return "cap";
  if (dynamic_cast<const InvalidParameterSystem*>(&ex)) return "parameters";
  if (dynamic_cast<const Contradiction*>(&ex)) return "contradiction";
  if (dynamic_cast<const ParseError*>(&ex)) return "parse";
  if (dynamic_cast<const InvalidArgument*>(&ex)) return "invalid";
  return "engine";
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string error_output(const std::string& kind, const std::string& message, ReportFormat fmt) {
  if (fmt == ReportFormat::Json)
    return json{{"version", kReportVersion}, {"error", {{"kind", kind}, {"message", message}}}}.dump(2) + "\n";
  if (fmt == ReportFormat::Csv) return std::string("# version ") + kReportVersion + "\nerror,kind\n" + csv_cell(message) + "," + kind + "\n";
  return "error (" + kind + "): " + message + "\n";
}

// One flat record per parameter ideal.
std::string emit_records(const json& doc, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) return doc.dump(2) + "\n";
  const json& rows = doc["results"];
  std::ostringstream os;
  if (fmt == ReportFormat::Csv) {
    os << "# version " << kReportVersion << "\n";
    if (rows.empty()) return os.str();
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it, first = false) os << (first ? "" : ",") << it.key();
    os << "\n";
    for (const auto& r : rows) {
      first = true;
      for (auto it = r.begin(); it != r.end(); ++it, first = false) os << (first ? "" : ",") << csv_cell(*it);
      os << "\n";
    }
    return os.str();
  }
  os << kReportVersion << "\n" << doc["command"].get<std::string>() << " on " << doc["ring"].get<std::string>()
     << " (d = " << doc["d"] << ")\n";
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "version" && it.key() != "command" && it.key() != "ring" && it.key() != "d" &&
        it.key() != "results")
      os << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  for (const auto& r : rows) {
    os << "\n";
    for (auto it = r.begin(); it != r.end(); ++it)
      os << "  " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  return os.str();
}

json header(const std::string& command, const LocalRing& a) {
  return json{{"version", kReportVersion}, {"command", command}, {"ring", a.name()}, {"d", a.dimension()}};
}

std::vector<ParameterSystem> systems(const LocalRing& a, const JobSpec& spec, bool full) {
  if (spec.params.empty()) throw InvalidArgument("no params declared");
  std::vector<ParameterSystem> out;
  for (const auto& p : spec.params) {
    auto q = validate_parameter_system(a, p.elements);
    if (full && !q.full)
      throw InvalidParameterSystem("params " + p.name + " has " + std::to_string(q.size()) +
                                   " elements; a full system needs " + std::to_string(a.dimension()));
    out.push_back(std::move(q));
  }
  return out;
}

json ia_json(const IAEstimate& ia) {
  return json{{"value", ia.value}, {"status", to_string(ia.status)}, {"trace", ia.trace}};
}

DispatchResult run_invariants(const LocalRing& a, const JobSpec& spec, ReportFormat fmt) {
  json doc = header("invariants", a);
  doc["h0_length"] = zeroth_local_cohomology_length(a);
  json rows = json::array();
  for (const auto& q : systems(a, spec, true)) {
    const auto an = analyze_hilbert_samuel(a, q, a.config().n_max_ia);
    const std::uint64_t col = *a.colength(a.ideal(q.elements));
    rows.push_back(json{{"Q", q.to_string()},
                        {"colength", col},
                        {"multiplicity", an.fit.e},
                        {"iq", static_cast<std::int64_t>(col) - static_cast<std::int64_t>(an.fit.e)},
                        {"fit_window_start", an.fit.window_start},
                        {"fit_certified", an.fit.certified},
                        {"ia", an.ia.value},
                        {"ia_status", to_string(an.ia.status)},
                        {"ia_trace", an.ia.trace}});
  }
  doc["results"] = rows;
  return {kExitOk, emit_records(doc, fmt)};
}

DispatchResult run_graded(const LocalRing& a, const JobSpec& spec, ReportFormat fmt) {
  json doc = header("graded", a);
  json rows = json::array();
  for (const auto& q : systems(a, spec, true)) {
    const auto ia = invariant_ia(a, q, a.config().n_max_ia);
    const auto certified = ia.status == IAStatus::Stabilized ? std::optional<std::int64_t>(ia.value) : std::nullopt;
    const auto cert = regularity_g(a, q, certified);
    const auto view = postulation(a, q, cert.horizon);
    std::vector<std::string> seq;
    for (const auto& z : cert.sequence) seq.push_back(z.element.to_string());
    rows.push_back(json{{"Q", q.to_string()},
                        {"ia", ia.value},
                        {"ia_status", to_string(ia.status)},
                        {"horizon", cert.horizon},
                        {"hilbert", view.hilbert},
                        {"polynomial", view.coeffs},
                        {"postulation", view.postulation},
                        {"reg", cert.reg},
                        {"filter_regular", seq}});
  }
  doc["results"] = rows;
  return {kExitOk, emit_records(doc, fmt)};
}

DispatchResult run_rees(const LocalRing& a, const JobSpec& spec, ReportFormat fmt) {
  json doc = header("rees", a);
  json rows = json::array();
  for (const auto& q : systems(a, spec, true)) {
    const auto rp = rees_presentation(a, q);
    std::vector<std::string> gens;
    for (const auto& g : rp.minimal) gens.push_back(g.to_string());
    rows.push_back(json{{"Q", q.to_string()},
                        {"variables", rp.variables},
                        {"reltype", rp.reltype},
                        {"minimal", gens},
                        {"degrees", rp.minimal_degrees}});
  }
  doc["results"] = rows;
  return {kExitOk, emit_records(doc, fmt)};
}

DispatchResult run_suite_cmd(const LocalRing& a, const JobSpec& spec, Grid grid, ReportFormat fmt) {
  const auto rep = run_suite(a, systems(a, spec, true), grid);
  int code = kExitOk;
  if (rep.summary.fail > 0 || rep.summary.contradictions > 0) code = kExitFail;
  if (rep.summary.error > 0) code = kExitError;
  return {code, emit_report(rep, fmt)};
}

DispatchResult run_gcm_test(const LocalRing& a, const JobSpec& spec, ReportFormat fmt) {
  const auto qs = systems(a, spec, true);
  const auto& cfg = a.config();
  const auto colon = gcm_colon_test(a, qs, cfg.cap_fit);
  IAEstimate worst;
  bool any_divergent = false, all_stable = true;
  for (const auto& q : qs) {
    auto est = invariant_ia(a, q, cfg.n_max_ia);
    if (est.status == IAStatus::Divergent && !any_divergent) worst = est;
    any_divergent = any_divergent || est.status == IAStatus::Divergent;
    if (est.status != IAStatus::Stabilized) all_stable = false;
    if (!any_divergent && (worst.trace.empty() || est.value > worst.value)) worst = est;
  }
  std::vector<SopFamily> fams;
  for (const auto& q : qs)
    for (auto& f : default_families(a, q, 2 * cfg.window)) fams.push_back(std::move(f));
  const auto exp = theorem28_experiment(a, fams, static_cast<unsigned>(fams.size()) * 2 * cfg.window);
  const bool growth = !exp.witness.empty();

  std::string verdict = "inconclusive", reason;
  if (any_divergent || growth) {
    verdict = "not gCM";
    reason = any_divergent ? "I(A) trace divergent" : "";
    if (growth) reason += std::string(reason.empty() ? "" : "; ") + "growth in family " + exp.witness;
  } else if (all_stable && colon.uniform_within_cap && exp.verdict.rfind("gCM-consistent", 0) == 0) {
    verdict = "gCM-consistent";
    reason = "I(A) stabilized at " + std::to_string(worst.value) + "; colon exponents bounded by " +
             (colon.max_n ? std::to_string(*colon.max_n) : "?");
  } else {
    reason = "no divergence or growth observed, but I(A) or the colon test is not certified";
  }

  if (fmt == ReportFormat::Json) {
    json items = json::array();
    for (const auto& it : colon.items)
      items.push_back(json{{"sop", it.sop}, {"least_n", it.least_n ? json(*it.least_n) : json(nullptr)}});
    json doc = header("gcm-test", a);
    doc["verdict"] = verdict;
    doc["reason"] = reason;
    doc["ia"] = ia_json(worst);
    doc["colon"] = json{{"items", items},
                        {"max_n", colon.max_n ? json(*colon.max_n) : json(nullptr)},
                        {"uniform_within_cap", colon.uniform_within_cap}};
    json e = json::parse(emit_theorem28(exp, ReportFormat::Json));
    e.erase("version");
    doc["experiment"] = e;
    return {kExitOk, doc.dump(2) + "\n"};
  }
  if (fmt == ReportFormat::Csv)
    return {kExitOk, std::string("# version ") + kReportVersion + "\n# verdict " + verdict + "\n" +
                         emit_theorem28(exp, fmt)};
  std::ostringstream os;
  os << kReportVersion << "\ngcm-test on " << a.name() << " (d = " << a.dimension() << ")\n";
  os << "I(A) = " << worst.value << " (" << to_string(worst.status) << ")\n";
  os << "colon exponents:";
  for (const auto& it : colon.items) os << " " << (it.least_n ? std::to_string(*it.least_n) : "none");
  os << "\n" << emit_theorem28(exp, fmt);
  os << "gCM verdict: " << verdict << " (" << reason << ")\n";
  return {kExitOk, os.str()};
}

}  // namespace

EngineConfig job_config(const JobSpec& spec, const Overrides& ov, Grid& grid) {
  EngineConfig cfg;
  if (spec.n) {
    grid.n_max = *spec.n;
    cfg.cap_fit = *spec.n * cfg.window;
  }
  if (spec.m) grid.m_max = *spec.m;
  if (spec.seed) cfg.seed = *spec.seed;
  if (ov.seed) cfg.seed = *ov.seed;
  if (ov.cap_trunc) cfg.cap_trunc = *ov.cap_trunc;
  if (ov.cap_fit) cfg.cap_fit = *ov.cap_fit;
  if (ov.horizon) cfg.horizon = *ov.horizon;
  if (ov.threads) cfg.threads = std::max(1u, *ov.threads);
  return cfg;
}

DispatchResult dispatch(const JobSpec& spec, const Overrides& ov, ReportFormat fmt) {
  try {
    Grid grid;
    const EngineConfig cfg = job_config(spec, ov, grid);
    const LocalRing a = make_local_ring(spec.ring, cfg);
    switch (spec.command) {
      case Command::Invariants:
        return run_invariants(a, spec, fmt);
      case Command::Graded:
        return run_graded(a, spec, fmt);
      case Command::Rees:
        return run_rees(a, spec, fmt);
      case Command::Suite:
        return run_suite_cmd(a, spec, grid, fmt);
      case Command::GcmTest:
        return run_gcm_test(a, spec, fmt);
    }
    return {kExitError, error_output("invalid", "unknown command", fmt)};
  } catch (const Error& ex) {
    return {kExitError, error_output(error_kind(ex), ex.what(), fmt)};
  }
}

DispatchResult run_text(const std::string& text, const Overrides& ov, ReportFormat fmt) {
  JobSpec spec;
  try {
    spec = parse_job(text);
  } catch (const ParseError& ex) {
    return {kExitError, error_output("parse", ex.what(), fmt)};
  }
  return dispatch(spec, ov, fmt);
}

}  // namespace gcmwb
