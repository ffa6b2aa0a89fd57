#include <sstream>

#include "gcmwb/error.hpp"
#include "gcmwb/harness.hpp"
#include "json.hpp"

namespace gcmwb {

using json = nlohmann::ordered_json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json ia_json(const IAEstimate& ia) {
  return json{{"value", ia.value}, {"status", to_string(ia.status)}, {"trace", ia.trace}};
}

IAEstimate ia_from(const json& j) {
  IAEstimate ia;
  ia.value = j.at("value").get<std::int64_t>();
  ia.status = ia_status_from_string(j.at("status").get<std::string>());
  ia.trace = j.at("trace").get<std::vector<std::int64_t>>();
  return ia;
}

json entry_json(const BoundEntry& e) {
  return json{{"bound", e.bound}, {"Q", e.q},   {"n", opt(e.n)}, {"m", opt(e.m)}, {"lhs", e.lhs},
              {"rhs", e.rhs},     {"verdict", to_string(e.verdict)}, {"note", e.note}};
}

BoundEntry entry_from(const json& j) {
  BoundEntry e;
  e.bound = j.at("bound").get<std::string>();
  e.q = j.at("Q").get<std::string>();
  e.n = get_opt<std::int64_t>(j, "n");
  e.m = get_opt<std::int64_t>(j, "m");
  e.lhs = j.at("lhs").get<std::int64_t>();
  e.rhs = j.at("rhs").get<std::int64_t>();
  e.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  e.note = j.value("note", "");
  return e;
}

json query_json(const QuerySummary& q) {
  return json{{"Q", q.q},
              {"colength", q.colength},
              {"multiplicity", q.multiplicity},
              {"iq", q.iq},
              {"ia", ia_json(q.ia)},
              {"reg", opt(q.reg)},
              {"postulation", opt(q.postulation)},
              {"reltype", opt(q.reltype)},
              {"hilbert", q.hilbert},
              {"filter_regular", q.filter_regular},
              {"error", opt(q.error)}};
}

QuerySummary query_from(const json& j) {
  QuerySummary q;
  q.q = j.at("Q").get<std::string>();
  q.colength = j.at("colength").get<std::uint64_t>();
  q.multiplicity = j.at("multiplicity").get<std::uint64_t>();
  q.iq = j.at("iq").get<std::int64_t>();
  q.ia = ia_from(j.at("ia"));
  q.reg = get_opt<std::int64_t>(j, "reg");
  q.postulation = get_opt<std::int64_t>(j, "postulation");
  q.reltype = get_opt<std::int64_t>(j, "reltype");
  q.hilbert = j.at("hilbert").get<std::vector<std::uint64_t>>();
  q.filter_regular = j.at("filter_regular").get<std::vector<std::string>>();
  q.error = get_opt<std::string>(j, "error");
  return q;
}

json colon_json(const GcmColonReport& c) {
  json items = json::array();
  for (const auto& it : c.items) items.push_back(json{{"sop", it.sop}, {"least_n", opt(it.least_n)}});
  return json{{"items", items}, {"max_n", opt(c.max_n)}, {"uniform_within_cap", c.uniform_within_cap}};
}

GcmColonReport colon_from(const json& j) {
  GcmColonReport c;
  for (const auto& it : j.at("items")) c.items.push_back({it.at("sop").get<std::string>(), get_opt<unsigned>(it, "least_n")});
  c.max_n = get_opt<unsigned>(j, "max_n");
  c.uniform_within_cap = j.at("uniform_within_cap").get<bool>();
  return c;
}

json config_json(const ConfigSnapshot& c) {
  return json{{"caps",
               {{"trunc", c.cap_trunc},
                {"fit", c.cap_fit},
                {"saturate", c.cap_saturate},
                {"filter_retries", c.filter_retries}}},
              {"window", c.window},
              {"divergence_factor", c.divergence_factor},
              {"n_max_ia", c.n_max_ia},
              {"filter_slack", c.filter_slack},
              {"horizon", opt(c.horizon)},
              {"seeds", {{"engine", c.seed}}},
              {"char", c.characteristic},
              {"grid", {{"n", c.grid_n}, {"m", c.grid_m}}}};
}

ConfigSnapshot config_from(const json& j) {
  ConfigSnapshot c;
  const auto& caps = j.at("caps");
  c.cap_trunc = caps.at("trunc").get<unsigned>();
  c.cap_fit = caps.at("fit").get<unsigned>();
  c.cap_saturate = caps.at("saturate").get<unsigned>();
  c.filter_retries = caps.at("filter_retries").get<unsigned>();
  c.window = j.at("window").get<unsigned>();
  c.divergence_factor = j.at("divergence_factor").get<unsigned>();
  c.n_max_ia = j.at("n_max_ia").get<unsigned>();
  c.filter_slack = j.at("filter_slack").get<unsigned>();
  c.horizon = get_opt<unsigned>(j, "horizon");
  c.seed = j.at("seeds").at("engine").get<std::uint64_t>();
  c.characteristic = j.at("char").get<std::uint32_t>();
  c.grid_n = j.at("grid").at("n").get<unsigned>();
  c.grid_m = j.at("grid").at("m").get<unsigned>();
  return c;
}

json summary_json(const ReportSummary& s) {
  return json{{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skipped}, {"error", s.error},
              {"contradictions", s.contradictions}};
}

ReportSummary summary_from(const json& j) {
  ReportSummary s;
  s.pass = j.at("pass").get<unsigned>();
  s.fail = j.at("fail").get<unsigned>();
  s.skipped = j.at("skip").get<unsigned>();
  s.error = j.at("error").get<unsigned>();
  s.contradictions = j.at("contradictions").get<unsigned>();
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string entry_line(const BoundEntry& e) {
  std::string label = e.bound;
  if (e.n) label += " n=" + std::to_string(*e.n);
  if (e.m) label += " m=" + std::to_string(*e.m);
  switch (e.verdict) {
    case Verdict::Skipped:
      return label + ": SKIP (" + e.note + ")";
    case Verdict::Error:
      return label + ": ERROR (" + e.note + ")";
    default:
      break;
  }
  std::string s = label + ": " + std::to_string(e.lhs) + " ≤ " + std::to_string(e.rhs) + " " + to_string(e.verdict);
  if (e.verdict == Verdict::Pass && e.lhs == e.rhs) s += " (sharp)";
  if (e.verdict == Verdict::Fail && !e.note.empty()) s += " (" + e.note + ")";
  return s;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw InvalidArgument("unknown format '" + s + "' (expected json, csv, text)");
}

std::string emit_report(const BoundReport& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    json entries = json::array(), queries = json::array();
    for (const auto& e : rep.entries) entries.push_back(entry_json(e));
    for (const auto& q : rep.queries) queries.push_back(query_json(q));
    json j{{"version", kReportVersion},
           {"ring", rep.ring},
           {"d", rep.d},
           {"ia", ia_json(rep.ia)},
           {"gcm", {{"verified", rep.gcm_verified}, {"colon", colon_json(rep.colon)}}},
           {"queries", queries},
           {"entries", entries},
           {"summary", summary_json(rep.summary)},
           {"config", config_json(rep.config)},
           {"notes", rep.notes}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == ReportFormat::Csv) {
    os << "# " << kReportVersion << "\n";
    os << "bound,Q,n,m,lhs,rhs,verdict,note\n";
    for (const auto& e : rep.entries)
      os << csv_field(e.bound) << ',' << csv_field(e.q) << ',' << opt_str(e.n) << ',' << opt_str(e.m) << ','
         << e.lhs << ',' << e.rhs << ',' << to_string(e.verdict) << ',' << csv_field(e.note) << '\n';
    return os.str();
  }
  os << kReportVersion << "\n";
  os << "ring " << rep.ring << " (d = " << rep.d << ", char " << rep.config.characteristic << ")\n";
  os << "I(A) = " << rep.ia.value << " (" << to_string(rep.ia.status) << "; trace " << join(rep.ia.trace) << ")\n";
  os << "gCM: " << (rep.gcm_verified ? "verified" : "not verified");
  if (rep.colon.max_n) os << "; colon exponents uniform, max n = " << *rep.colon.max_n;
  else if (!rep.colon.items.empty()) os << "; no uniform colon exponent within cap";
  os << "\n";
  for (const auto& q : rep.queries) {
    os << "\nQ = " << q.q;
    if (q.error) {
      os << ": ERROR (" << *q.error << ")\n";
    } else {
      os << ": colength " << q.colength << ", e " << q.multiplicity << ", I(Q,A) " << q.iq;
      if (q.reg) os << ", reg " << *q.reg;
      if (q.postulation) os << ", p " << *q.postulation;
      if (q.reltype) os << ", reltype " << *q.reltype;
      os << "\n";
    }
    for (const auto& e : rep.entries)
      if (e.q == q.q) os << entry_line(e) << "\n";
  }
  const auto& s = rep.summary;
  os << "\nsummary: " << s.pass << " PASS, " << s.fail << " FAIL, " << s.skipped << " SKIP, " << s.error
     << " ERROR, " << s.contradictions << " contradictions\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  return os.str();
}

BoundReport parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("report json: ") + ex.what());
  }
  try {
    if (j.at("version").get<std::string>() != kReportVersion) throw InvalidArgument("unsupported report version");
    BoundReport rep;
    rep.ring = j.at("ring").get<std::string>();
    rep.d = j.at("d").get<std::size_t>();
    rep.ia = ia_from(j.at("ia"));
    rep.gcm_verified = j.at("gcm").at("verified").get<bool>();
    rep.colon = colon_from(j.at("gcm").at("colon"));
    for (const auto& q : j.at("queries")) rep.queries.push_back(query_from(q));
    for (const auto& e : j.at("entries")) rep.entries.push_back(entry_from(e));
    rep.summary = summary_from(j.at("summary"));
    rep.config = config_from(j.at("config"));
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("report json: ") + ex.what());
  }
}

std::string emit_theorem28(const Theorem28Report& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    json fams = json::array();
    for (const auto& f : rep.families) {
      json samples = json::array();
      for (const auto& s : f.samples)
        samples.push_back(json{{"sop", s.sop},
                               {"colon_exponent", opt(s.colon_exponent)},
                               {"reltype", s.reltype},
                               {"quotient_reltype", s.quotient_reltype},
                               {"proof_containment", s.proof_containment}});
      fams.push_back(json{{"label", f.label}, {"samples", samples}, {"growth", f.growth}, {"bounded", f.bounded}});
    }
    json j{{"version", kReportVersion}, {"ring", rep.ring},       {"r_obs", rep.r_obs},
           {"ambient_vars", rep.ambient_vars}, {"families", fams}, {"verdict", rep.verdict},
           {"witness", rep.witness}, {"scope", rep.scope}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == ReportFormat::Csv) {
    os << "family,sop,colon_exponent,reltype,quotient_reltype,proof_containment\n";
    for (const auto& f : rep.families)
      for (const auto& s : f.samples)
        os << csv_field(f.label) << ',' << csv_field(s.sop) << ','
           << (s.colon_exponent ? std::to_string(*s.colon_exponent) : "") << ',' << s.reltype << ','
           << s.quotient_reltype << ',' << (s.proof_containment ? "yes" : "no") << '\n';
    return os.str();
  }
  os << "ring " << rep.ring << ": r_obs = " << rep.r_obs << ", s = " << rep.ambient_vars << "\n";
  for (const auto& f : rep.families) {
    os << f.label << ":";
    for (const auto& s : f.samples) os << " " << (s.colon_exponent ? std::to_string(*s.colon_exponent) : "none");
    os << " (colon exponents)";
    if (f.growth) os << " growth";
    else if (f.bounded) os << " bounded";
    os << "\n";
  }
  os << "verdict: " << rep.verdict;
  if (!rep.witness.empty()) os << " (witness: " << rep.witness << ")";
  os << "\nscope: " << rep.scope << "\n";
  return os.str();
}

}  // namespace gcmwb
