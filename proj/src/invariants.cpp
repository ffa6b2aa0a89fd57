#include "gcmwb/invariants.hpp"

#include <algorithm>
#include <set>

#include "gcmwb/error.hpp"

namespace gcmwb {

std::string to_string(IAStatus s) {
  switch (s) {
    case IAStatus::Stabilized:
      return "stabilized";
    case IAStatus::Divergent:
      return "divergent";
    case IAStatus::CapReached:
      return "cap-reached";
  }
  return "?";
}

IAStatus ia_status_from_string(const std::string& s) {
  if (s == "stabilized") return IAStatus::Stabilized;
  if (s == "divergent") return IAStatus::Divergent;
  if (s == "cap-reached") return IAStatus::CapReached;
  throw InvalidArgument("unknown I(A) status " + s);
}

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t finite(const Length& l, const char* what) {
  if (!l) throw InvalidParameterSystem(std::string("infinite colength: ") + what);
  return *l;
}

void require_full(const ParameterSystem& q) {
  if (!q.full) throw InvalidArgument("a full system of parameters is required");
}

class HilbertSamuelSampler {
 public:
  HilbertSamuelSampler(const LocalRing& a, const ParameterSystem& q)
      : a_(a), q_(a.ideal(q.elements)), d_(a.dimension()) {}

  std::uint64_t at(std::size_t n) {
    while (samples_.size() <= n)
      samples_.push_back(finite(a_.colength(a_.power(q_, samples_.size() + 1)), "Q^n"));
    return samples_[n];
  }

  std::int64_t difference(std::size_t n) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k <= d_; ++k) {
      const std::int64_t v = binom(d_, k) * static_cast<std::int64_t>(at(n - k));
      s += (k % 2 ? -v : v);
    }
    return s;
  }

  // First window of w equal positive d-th differences starting at or after `start`.
  MultiplicityFit fit_from(std::size_t start, unsigned w, unsigned cap) {
    for (std::size_t n0 = std::max(start, d_);; ++n0) {
      if (n0 + w - 1 > cap) throw CapExceeded("multiplicity fit", cap);
      const std::int64_t v = difference(n0);
      bool ok = v > 0;
      for (std::size_t k = 1; ok && k < w; ++k) ok = difference(n0 + k) == v;
      if (ok) {
        MultiplicityFit f;
        f.e = static_cast<std::uint64_t>(v);
        f.window_start = n0;
        f.samples.assign(samples_.begin(), samples_.begin() + static_cast<std::ptrdiff_t>(n0 + w));
        return f;
      }
    }
  }

 private:
  const LocalRing& a_;
  Ideal q_;
  std::size_t d_;
  std::vector<std::uint64_t> samples_;
};

IAStatus classify(const std::vector<std::int64_t>& tr, unsigned w, unsigned factor) {
  if (tr.size() >= w && w > 0) {
    const auto tail = tr.end() - w;
    if (std::all_of(tail, tr.end(), [&](std::int64_t v) { return v == *tail; })) return IAStatus::Stabilized;
    bool rising = true;
    for (auto it = tail + 1; it != tr.end(); ++it) rising = rising && *it > *(it - 1);
    if (rising) {
      bool all_rising = true;
      for (std::size_t k = 1; k < tr.size(); ++k) all_rising = all_rising && tr[k] > tr[k - 1];
      if (tr.back() > std::int64_t(factor) * (tr.front() + 1)) return IAStatus::Divergent;
      if (all_rising && tr.size() >= 2 * std::size_t(w)) return IAStatus::Divergent;
    }
  }
  return IAStatus::CapReached;
}

}  // namespace

HilbertSamuelAnalysis analyze_hilbert_samuel(const LocalRing& a, const ParameterSystem& q, unsigned n_max) {
  require_full(q);
  if (n_max == 0) throw InvalidArgument("n_max must be positive");
  const auto& cfg = a.config();
  const std::size_t d = a.dimension();
  HilbertSamuelAnalysis out;
  if (d == 0) {
    // Artinian: Q = 0, e = ℓ(A), every deviation vanishes.
    out.fit.e = finite(a.colength(Ideal::zero(a.ring())), "A");
    out.fit.samples = {out.fit.e};
    out.fit.certified = true;
    out.ia.trace.assign(n_max, 0);
    out.ia.status = IAStatus::Stabilized;
    return out;
  }

  std::vector<std::uint64_t> pure;  // pure[n-1] = ℓ(A/(x_1^n..x_d^n))
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Polynomial> gens;
    for (const auto& x : q.elements) gens.push_back(x.pow(n));
    pure.push_back(finite(a.colength(a.ideal(gens)), "Q^[n]"));
  }
  auto trace_for = [&](std::uint64_t e) {
    std::vector<std::int64_t> tr;
    for (unsigned n = 1; n <= n_max; ++n)
      tr.push_back(static_cast<std::int64_t>(pure[n - 1]) - ipow(n, d) * static_cast<std::int64_t>(e));
    return tr;
  };
  auto consistent = [](const std::vector<std::int64_t>& tr) {
    for (std::size_t k = 0; k < tr.size(); ++k)
      if (tr[k] < 0 || (k > 0 && tr[k] < tr[k - 1])) return false;
    return true;
  };

  HilbertSamuelSampler hs(a, q);
  std::size_t start = 0;
  for (;;) {
    MultiplicityFit fit = hs.fit_from(start, cfg.window, cfg.cap_fit);
    auto tr = trace_for(fit.e);
    if (!consistent(tr)) {
      // A premature window; the true e makes the trace a nonnegative
      // non-decreasing sequence.
      start = fit.window_start + 1;
      continue;
    }
    const IAStatus st = classify(tr, cfg.window, cfg.divergence_factor);
    if (st == IAStatus::Stabilized) {
      const auto pb = postulation_bound(tr.back(), d);
      if (pb) {
        const std::size_t required = static_cast<std::size_t>(*pb) + d;
        if (fit.window_start < required) {
          start = required;
          MultiplicityFit later = hs.fit_from(start, cfg.window, cfg.cap_fit);
          if (later.e != fit.e) continue;
          fit = later;
        }
        fit.certified = true;
      }
    }
    out.fit = std::move(fit);
    out.ia.trace = std::move(tr);
    out.ia.status = st;
    out.ia.value = out.ia.trace.back();
    return out;
  }
}

std::uint64_t multiplicity(const LocalRing& a, const ParameterSystem& q) {
  return analyze_hilbert_samuel(a, q, a.config().n_max_ia).fit.e;
}

InvariantRecord invariant_iq(const LocalRing& a, const ParameterSystem& q) {
  require_full(q);
  auto an = analyze_hilbert_samuel(a, q, a.config().n_max_ia);
  InvariantRecord r;
  r.ring = a.name();
  r.q = q.to_string();
  r.colength = finite(a.colength(a.ideal(q.elements)), "Q");
  r.multiplicity = an.fit.e;
  r.iq = static_cast<std::int64_t>(r.colength) - static_cast<std::int64_t>(r.multiplicity);
  r.fit_window_start = an.fit.window_start;
  r.fit_certified = an.fit.certified;
  return r;
}

IAEstimate invariant_ia(const LocalRing& a, const ParameterSystem& q, unsigned n_max) {
  return analyze_hilbert_samuel(a, q, n_max).ia;
}

std::int64_t euler_multiplicity_dim1(const LocalRing& a, const Polynomial& x) {
  if (a.dimension() != 1) throw InvalidArgument("euler_multiplicity_dim1 needs a one-dimensional ring");
  const auto quot = finite(a.colength(a.ideal({x})), "xA");
  const auto ann = a.finite_subquotient_length(ideal_quotient(a.defining_ideal(), x), Ideal::zero(a.ring()));
  return static_cast<std::int64_t>(quot) - static_cast<std::int64_t>(ann);
}

std::uint64_t zeroth_local_cohomology_length(const LocalRing& a) {
  return a.finite_subquotient_length(saturate_at_origin(a.defining_ideal()), Ideal::zero(a.ring()));
}

LocalRing quotient_ring_by_subsystem(const LocalRing& a, const ParameterSystem& j, unsigned power) {
  const std::size_t d = a.dimension(), i = j.size();
  if (i == 0 || i >= d) throw InvalidArgument("subsystem must have 0 < i < d elements");
  if (power == 0) throw InvalidArgument("power must be positive");
  const Ideal jp = a.power(a.ideal(j.elements), power);
  return a.quotient(jp.generators(), d - i, a.name() + "/" + j.to_string() + "^" + std::to_string(power));
}

BoundEntry check_theorem_invariant_bound(const LocalRing& a, const ParameterSystem& q, std::size_t i, unsigned n,
                                         std::int64_t ia) {
  require_full(q);
  const std::int64_t rhs = binom(n + i - 1, i - 1) * ia;
  try {
    LocalRing b = quotient_ring_by_subsystem(a, q.prefix(i), n + 1);
    std::vector<Polynomial> rest(q.elements.begin() + static_cast<std::ptrdiff_t>(i), q.elements.end());
    ParameterSystem qb = validate_parameter_system(b, rest);
    IAEstimate est = invariant_ia(b, qb, a.config().n_max_ia);
    std::string note = "i=" + std::to_string(i);
    if (est.status != IAStatus::Stabilized) {
      BoundEntry e = make_entry("Thm1.2", q.to_string(), n, std::nullopt, est.value, rhs,
                                note + "; quotient trace " + to_string(est.status));
      e.verdict = Verdict::Fail;
      return e;
    }
    return make_entry("Thm1.2", q.to_string(), n, std::nullopt, est.value, rhs, note);
  } catch (const Error& ex) {
    return error_entry("Thm1.2", q.to_string(), n, std::nullopt, ex.what());
  }
}

std::vector<BoundEntry> check_colon_bounds(const LocalRing& a, const ParameterSystem& q, std::size_t i, unsigned n,
                                           unsigned m, std::int64_t ia) {
  require_full(q);
  const std::size_t d = a.dimension();
  std::vector<BoundEntry> out;
  const Ideal& def = a.defining_ideal();
  if (i > 0 && i < d) {
    try {
      const Ideal jn = a.power(a.ideal(q.prefix(i).elements), n + 1);
      const Ideal u = ideal_quotient(sum(def, jn), q.elements[i].pow(m));
      const auto lhs = a.finite_subquotient_length(u, jn);
      out.push_back(make_entry("Cor1.3", q.to_string(), n, m, static_cast<std::int64_t>(lhs),
                               binom(n + i - 1, i - 1) * ia, "i=" + std::to_string(i)));
    } catch (const Error& ex) {
      out.push_back(error_entry("Cor1.3", q.to_string(), n, m, ex.what()));
    }
  }
  if (d >= 2) {
    try {
      const Ideal qi = a.ideal(q.elements);
      const Ideal qn = a.power(qi, n);
      const Ideal u = ideal_quotient(sum(def, a.power(qi, n + m)), q.elements[d - 1].pow(m));
      const auto lhs = a.finite_subquotient_length(u, qn);
      out.push_back(make_entry("Cor1.4", q.to_string(), n, m, static_cast<std::int64_t>(lhs),
                               binom(n + d - 2, d - 2) * ia));
    } catch (const Error& ex) {
      out.push_back(error_entry("Cor1.4", q.to_string(), n, m, ex.what()));
    }
  }
  return out;
}

BoundEntry check_hilbert_bound(const LocalRing& a, const ParameterSystem& q, unsigned n, std::uint64_t e,
                               std::int64_t ia) {
  require_full(q);
  const std::int64_t d = static_cast<std::int64_t>(a.dimension());
  try {
    const auto lhs = finite(a.colength(a.power(a.ideal(q.elements), n + 1)), "Q^n");
    const std::int64_t rhs = binom(n + d, d) * static_cast<std::int64_t>(e) + binom(n + d - 1, d - 1) * ia;
    return make_entry("Lemma1.1", q.to_string(), n, std::nullopt, static_cast<std::int64_t>(lhs), rhs);
  } catch (const Error& ex) {
    return error_entry("Lemma1.1", q.to_string(), n, std::nullopt, ex.what());
  }
}

std::optional<unsigned> least_colon_exponent(const LocalRing& a, const ParameterSystem& sop, unsigned n_cap) {
  const std::size_t d = sop.size();
  if (d == 0) throw InvalidArgument("empty system of parameters");
  const Ideal j = a.ideal(sop.prefix(d - 1).elements);
  const Ideal k = sum(a.defining_ideal(), j);
  const Ideal colon = ideal_quotient(k, sop.elements[d - 1]);
  const auto& gb = k.basis();

  // Elements of m^n·colon not yet locally inside k; only these need multiplying on.
  auto survivors = [&](const std::vector<Polynomial>& cand) {
    std::vector<Polynomial> out;
    std::set<std::string> seen;
    for (const auto& f : cand) {
      Polynomial r = gb.normal_form(f);
      if (r.is_zero()) continue;
      r = r.monic();
      if (!seen.insert(r.to_string()).second) continue;
      if (!a.locally_contains(j, r)) out.push_back(std::move(r));
    }
    return out;
  };

  std::vector<Polynomial> live = survivors(colon.generators());
  if (live.empty()) return 0u;
  for (unsigned n = 1; n <= n_cap; ++n) {
    std::vector<Polynomial> next;
    for (const auto& f : live)
      for (std::size_t v = 0; v < a.num_vars(); ++v) next.push_back(f * Polynomial::variable(a.ring(), v));
    live = survivors(next);
    if (live.empty()) return n;
  }
  return std::nullopt;
}

GcmColonReport gcm_colon_test(const LocalRing& a, const std::vector<ParameterSystem>& sops, unsigned n_cap) {
  GcmColonReport r;
  r.uniform_within_cap = true;
  unsigned mx = 0;
  for (const auto& s : sops) {
    require_full(s);
    auto n = least_colon_exponent(a, s, n_cap);
    r.items.push_back({s.to_string(), n});
    if (n)
      mx = std::max(mx, *n);
    else
      r.uniform_within_cap = false;
  }
  if (r.uniform_within_cap && !sops.empty()) r.max_n = mx;
  return r;
}

}  // namespace gcmwb
