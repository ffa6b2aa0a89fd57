#include "gcmwb/harness.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "gcmwb/error.hpp"
#include "gcmwb/graded.hpp"
#include "gcmwb/rees.hpp"

namespace gcmwb {

namespace {

struct QueryResult {
  QuerySummary summary;
  std::optional<std::uint64_t> e;
  std::vector<BoundEntry> entries;
};

QueryResult analyze_query(const LocalRing& a, const ParameterSystem& q) {
  QueryResult r;
  r.summary.q = q.to_string();
  try {
    auto an = analyze_hilbert_samuel(a, q, a.config().n_max_ia);
    r.e = an.fit.e;
    r.summary.multiplicity = an.fit.e;
    r.summary.ia = an.ia;
    r.summary.colength = *a.colength(a.ideal(q.elements));
    r.summary.iq = static_cast<std::int64_t>(r.summary.colength) - static_cast<std::int64_t>(an.fit.e);
  } catch (const Error& ex) {
    r.summary.error = ex.what();
  }
  return r;
}

void skip_all(std::vector<BoundEntry>& out, const std::string& q, const std::vector<const char*>& ids,
              const std::string& reason) {
  for (const char* id : ids) out.push_back(skipped_entry(id, q, reason));
}

// Every bound entry for one Q, given the certified I(A) and horizon.
void bound_entries(const LocalRing& a, const ParameterSystem& q, Grid grid, std::int64_t ia, std::int64_t horizon,
                   QueryResult& r) {
  const std::size_t d = a.dimension();
  const std::string qs = q.to_string();
  auto& out = r.entries;

  for (unsigned n = 0; n <= grid.n_max; ++n) out.push_back(check_hilbert_bound(a, q, n, *r.e, ia));

  if (d >= 2) {
    for (std::size_t i = 1; i < d; ++i)
      for (unsigned n = 0; n <= grid.n_max; ++n) {
        out.push_back(check_theorem_invariant_bound(a, q, i, n, ia));
        for (unsigned m = 1; m <= grid.m_max; ++m)
          for (auto& e : check_colon_bounds(a, q, i, n, m, ia))
            if (e.bound == "Cor1.3" || i == 1) out.push_back(std::move(e));
      }
  } else {
    skip_all(out, qs, {"Thm1.2", "Cor1.3", "Cor1.4", "Lemma2.4", "Thm2.2"}, "requires d >= 2");
  }

  try {
    GradedView view = postulation(a, q, horizon);
    RegularityCertificate cert = regularity_g(a, q, horizon);
    const unsigned reltype = rees_presentation(a, q).reltype;
    r.summary.hilbert = view.hilbert;
    r.summary.postulation = static_cast<std::int64_t>(view.postulation);
    r.summary.reg = cert.reg;
    r.summary.reltype = reltype;
    for (const auto& f : cert.sequence) r.summary.filter_regular.push_back(f.element.to_string());

    const auto rb = regularity_bound(ia, d);
    const auto pb = postulation_bound(ia, d);
    if (rb)
      out.push_back(make_entry("Thm2.5", qs, std::nullopt, std::nullopt, cert.reg, *rb));
    else
      out.push_back(skipped_entry("Thm2.5", qs, "bound overflows"));
    if (pb) {
      out.push_back(make_entry("Cor2.6", qs, std::nullopt, std::nullopt,
                               static_cast<std::int64_t>(view.postulation), *pb));
      out.push_back(make_entry("Cor2.7", qs, std::nullopt, std::nullopt, reltype, *pb));
    } else {
      skip_all(out, qs, {"Cor2.6", "Cor2.7"}, "bound overflows");
    }
    if (d >= 2) {
      std::vector<unsigned> ns;
      for (unsigned k = 0; k <= 2; ++k) ns.push_back(static_cast<unsigned>(view.postulation) + k);
      for (auto& e : mumford_gap_check(a, q, cert, view, ns, ia)) out.push_back(std::move(e));
    }
  } catch (const Error& ex) {
    for (const char* id : {"Thm2.5", "Cor2.6", "Cor2.7"})
      out.push_back(error_entry(id, qs, std::nullopt, std::nullopt, ex.what()));
  }
}

bool entry_less(const BoundEntry& x, const BoundEntry& y) {
  return std::tie(x.bound, x.q, x.n, x.m, x.note) < std::tie(y.bound, y.q, y.n, y.m, y.note);
}

template <class F>
auto run_jobs(std::size_t count, unsigned threads, F&& job) {
  using R = decltype(job(std::size_t{0}));
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = job(k);
    return out;
  }
  for (std::size_t start = 0; start < count; start += threads) {
    std::vector<std::future<R>> fs;
    for (std::size_t k = start; k < std::min(count, start + threads); ++k)
      fs.push_back(std::async(std::launch::async, [&job, k] { return job(k); }));
    for (std::size_t k = 0; k < fs.size(); ++k) out[start + k] = fs[k].get();
  }
  return out;
}

ConfigSnapshot snapshot(const LocalRing& a, Grid grid) {
  const auto& c = a.config();
  ConfigSnapshot s;
  s.cap_trunc = c.cap_trunc;
  s.cap_fit = c.cap_fit;
  s.cap_saturate = c.cap_saturate;
  s.window = c.window;
  s.divergence_factor = c.divergence_factor;
  s.n_max_ia = c.n_max_ia;
  s.filter_retries = c.filter_retries;
  s.filter_slack = c.filter_slack;
  s.horizon = c.horizon;
  s.seed = c.seed;
  s.characteristic = a.ring()->field().characteristic();
  s.grid_n = grid.n_max;
  s.grid_m = grid.m_max;
  return s;
}

}  // namespace

ReportSummary summarize(const std::vector<BoundEntry>& entries, bool gcm_verified) {
  ReportSummary s;
  for (const auto& e : entries) {
    switch (e.verdict) {
      case Verdict::Pass:
        ++s.pass;
        break;
      case Verdict::Fail:
        ++s.fail;
        if (gcm_verified) ++s.contradictions;
        break;
      case Verdict::Skipped:
        ++s.skipped;
        break;
      case Verdict::Error:
        ++s.error;
        break;
    }
  }
  return s;
}

BoundReport run_suite(const LocalRing& a, const std::vector<ParameterSystem>& qs, Grid grid) {
  if (qs.empty()) throw InvalidArgument("run_suite needs at least one parameter ideal");
  for (const auto& q : qs)
    if (!q.full) throw InvalidArgument("run_suite needs full systems of parameters");
  const auto& cfg = a.config();
  BoundReport rep;
  rep.ring = a.name();
  rep.d = a.dimension();
  rep.config = snapshot(a, grid);
  rep.notes.push_back("I(A) is the supremum over the sampled power families only");

  auto results = run_jobs(qs.size(), cfg.threads, [&](std::size_t k) { return analyze_query(a, qs[k]); });

  // I(A): the largest stabilized value, unless some trace did not stabilize.
  bool all_stable = true;
  const IAEstimate* worst = nullptr;
  for (const auto& r : results) {
    if (r.summary.error) {
      all_stable = false;
      continue;
    }
    const auto& est = r.summary.ia;
    if (est.status != IAStatus::Stabilized) {
      all_stable = false;
      if (!worst || worst->status == IAStatus::Stabilized || est.status == IAStatus::Divergent) worst = &est;
    } else if (!worst || (worst->status == IAStatus::Stabilized && est.value > worst->value)) {
      worst = &est;
    }
  }
  if (worst) rep.ia = *worst;

  try {
    rep.colon = gcm_colon_test(a, qs, cfg.cap_fit);
  } catch (const Error& ex) {
    rep.notes.push_back(std::string("colon test failed: ") + ex.what());
  }
  rep.gcm_verified = all_stable && worst && rep.colon.uniform_within_cap;

  std::optional<std::int64_t> horizon;
  if (rep.gcm_verified || cfg.horizon) {
    try {
      horizon = graded_horizon(a, rep.gcm_verified ? std::optional<std::int64_t>(rep.ia.value) : std::nullopt);
    } catch (const Error& ex) {
      rep.notes.push_back(ex.what());
    }
  }

  auto filled = run_jobs(qs.size(), cfg.threads, [&](std::size_t k) {
    QueryResult r = results[k];
    const std::string qstr = qs[k].to_string();
    static const std::vector<const char*> all_ids = {"Lemma1.1", "Thm1.2", "Cor1.3", "Cor1.4", "Thm2.5",
                                                     "Cor2.6",   "Cor2.7", "Lemma2.4", "Thm2.2"};
    if (r.summary.error) {
      for (const char* id : all_ids)
        r.entries.push_back(error_entry(id, qstr, std::nullopt, std::nullopt, *r.summary.error));
    } else if (!rep.gcm_verified) {
      skip_all(r.entries, qstr, all_ids, "A not verified gCM: I(A) is not certified finite");
    } else if (!horizon) {
      skip_all(r.entries, qstr, all_ids, "horizon uncertifiable");
    } else {
      bound_entries(a, qs[k], grid, rep.ia.value, *horizon, r);
    }
    return r;
  });

  for (auto& r : filled) {
    rep.queries.push_back(std::move(r.summary));
    for (auto& e : r.entries) rep.entries.push_back(std::move(e));
  }
  if (rep.gcm_verified)
    for (auto& e : rep.entries)
      if (e.verdict == Verdict::Fail) e.note += e.note.empty() ? "contradiction" : "; contradiction";
  std::stable_sort(rep.entries.begin(), rep.entries.end(), entry_less);
  rep.summary = summarize(rep.entries, rep.gcm_verified);
  return rep;
}

namespace {

unsigned reltype_of(const LocalRing& a, const ParameterSystem& q) {
  if (a.dimension() == 1) return principal_reltype(a, q.elements.front());
  return rees_presentation(a, q).reltype;
}

bool strictly_rising_tail(const std::vector<std::int64_t>& v, unsigned w) {
  if (v.size() < w || w < 2) return false;
  for (std::size_t k = v.size() - w + 1; k < v.size(); ++k)
    if (v[k] <= v[k - 1]) return false;
  return true;
}

bool constant_tail(const std::vector<std::int64_t>& v, unsigned w) {
  if (v.size() < w || w == 0) return false;
  for (std::size_t k = v.size() - w + 1; k < v.size(); ++k)
    if (v[k] != v[k - 1]) return false;
  return true;
}

}  // namespace

Theorem28Report theorem28_experiment(const LocalRing& a, const std::vector<SopFamily>& families, unsigned budget) {
  if (budget == 0) throw InvalidArgument("budget must be at least 1");
  const auto& cfg = a.config();
  const std::size_t d = a.dimension();
  Theorem28Report rep;
  rep.ring = a.name();
  rep.ambient_vars = a.num_vars();
  unsigned used = 0;
  std::vector<std::string> labels;
  for (const auto& fam : families) {
    FamilyTrace tr;
    tr.label = fam.label;
    labels.push_back(fam.label);
    for (const auto& sop : fam.members) {
      if (used >= budget) break;
      ++used;
      FamilySample s;
      s.sop = sop.to_string();
      s.colon_exponent = least_colon_exponent(a, sop, cfg.cap_fit);
      s.reltype = reltype_of(a, sop);
      for (std::size_t i = 1; i < d; ++i)
        for (unsigned k = 1; k <= 2; ++k) {
          LocalRing b = quotient_ring_by_subsystem(a, sop.prefix(i), k);
          std::vector<Polynomial> rest(sop.elements.begin() + static_cast<std::ptrdiff_t>(i), sop.elements.end());
          s.quotient_reltype = std::max(s.quotient_reltype, reltype_of(b, validate_parameter_system(b, rest)));
        }
      rep.r_obs = std::max({rep.r_obs, s.reltype, s.quotient_reltype});
      tr.samples.push_back(std::move(s));
    }
    rep.families.push_back(std::move(tr));
  }

  const unsigned w = cfg.window;
  const std::int64_t bound = static_cast<std::int64_t>(rep.r_obs) * static_cast<std::int64_t>(rep.ambient_vars);
  bool all_bounded = !rep.families.empty();
  for (auto& tr : rep.families) {
    std::vector<std::int64_t> colon, rel;
    bool missing = false;
    for (auto& s : tr.samples) {
      if (!s.colon_exponent) missing = true;
      colon.push_back(s.colon_exponent ? static_cast<std::int64_t>(*s.colon_exponent) : -1);
      rel.push_back(std::max(s.reltype, s.quotient_reltype));
      s.proof_containment = s.colon_exponent && static_cast<std::int64_t>(*s.colon_exponent) <= bound;
    }
    tr.growth = missing || strictly_rising_tail(colon, w) || strictly_rising_tail(rel, w);
    tr.bounded = !tr.growth && constant_tail(colon, w) && constant_tail(rel, w);
    if (tr.growth && rep.witness.empty()) rep.witness = tr.label;
    all_bounded = all_bounded && tr.bounded;
  }
  if (!rep.witness.empty())
    rep.verdict = "not gCM (growth detected)";
  else if (all_bounded)
    rep.verdict = "gCM-consistent (uniformly bounded)";
  else
    rep.verdict = "inconclusive";

  rep.scope = "sampled " + std::to_string(used) + " parameter systems over " + std::to_string(families.size()) +
              " families; quotients A/J^k for proper prefixes J and k = 1, 2";
  return rep;
}

std::vector<SopFamily> default_families(const LocalRing& a, const ParameterSystem& base, unsigned length) {
  std::vector<SopFamily> out;
  auto add_family = [&](std::string label, auto make) {
    SopFamily fam{std::move(label), {}};
    for (unsigned t = 1; t <= length; ++t) {
      try {
        fam.members.push_back(validate_parameter_system(a, make(t)));
      } catch (const InvalidParameterSystem&) {
        // a degenerate member; the family stays ordered by t
      }
    }
    out.push_back(std::move(fam));
  };
  add_family("power " + base.to_string() + "^t", [&](unsigned t) {
    std::vector<Polynomial> el;
    for (const auto& x : base.elements) el.push_back(x.pow(t));
    return el;
  });
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    const Polynomial var = Polynomial::variable(a.ring(), v);
    add_family("perturbed " + base.to_string() + " + " + a.ring()->variables()[v] + "^t", [&, var](unsigned t) {
      std::vector<Polynomial> el;
      for (const auto& x : base.elements) el.push_back(x + var.pow(t));
      return el;
    });
  }
  return out;
}

}  // namespace gcmwb
