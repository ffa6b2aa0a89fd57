#include "gcmwb/graded.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gcmwb/error.hpp"
#include "gcmwb/invariants.hpp"

namespace gcmwb {

namespace {

std::uint64_t finite(const Length& l, const char* what) {
  if (!l) throw InvalidParameterSystem(std::string("infinite colength: ") + what);
  return *l;
}

// binom(x, k) for any integer x (falling factorial over k!).
std::int64_t gbinom(std::int64_t x, std::int64_t k) {
  if (k < 0) return 0;
  __int128 num = 1, den = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    num *= (x - j);
    den *= (j + 1);
  }
  return static_cast<std::int64_t>(num / den);
}

// Graded pieces of M = G/(y*)G realized as ideals of A.
class GradedModel {
 public:
  GradedModel(const LocalRing& a, const ParameterSystem& q, const std::vector<Polynomial>& ys)
      : a_(a), q_(a.ideal(q.elements)), y_(a.ideal(ys)) {}

  Ideal qpow(unsigned n) const { return a_.power(q_, n); }

  const Ideal& d(unsigned n) {
    auto it = d_.find(n);
    if (it != d_.end()) return it->second;
    Ideal v = n == 0 || y_.generators().empty() ? qpow(n + 1) : sum(product(y_, qpow(n - 1)), qpow(n + 1));
    return d_.emplace(n, a_.reduce(v)).first->second;
  }

  std::uint64_t col(const Ideal& j) const { return finite(a_.colength(j), "graded component"); }

  // ℓ(A/(X ∩ Q^n)) by inclusion–exclusion.
  std::uint64_t col_meet_qpow(const Ideal& x, unsigned n) const {
    const Ideal qn = qpow(n);
    return col(x) + col(qn) - col(sum(x, qn));
  }

  std::uint64_t torsion(unsigned n, unsigned m) {
    const Ideal x = ideal_quotient(sum(a_.defining_ideal(), d(n + m)), qpow(m));
    return col(d(n)) - col_meet_qpow(x, n);
  }

  std::uint64_t annihilator(const Polynomial& y, unsigned n) {
    const Ideal x = ideal_quotient(sum(a_.defining_ideal(), d(n + 1)), y);
    return col(d(n)) - col_meet_qpow(x, n);
  }

 private:
  const LocalRing& a_;
  Ideal q_, y_;
  std::map<unsigned, Ideal> d_;
};

void require_full(const ParameterSystem& q) {
  if (!q.full) throw InvalidArgument("a full system of parameters is required");
}

}  // namespace

std::uint64_t hilbert_g(const LocalRing& a, const ParameterSystem& q, unsigned n) {
  require_full(q);
  const Ideal qi = a.ideal(q.elements);
  return finite(a.colength(a.power(qi, n + 1)), "Q^n") - finite(a.colength(a.power(qi, n)), "Q^n");
}

std::int64_t GradedView::polynomial(std::int64_t n) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * gbinom(n, static_cast<std::int64_t>(k));
  return s;
}

std::int64_t graded_horizon(const LocalRing& a, std::optional<std::int64_t> certified_ia) {
  if (a.config().horizon) return *a.config().horizon;
  if (!certified_ia) throw InvalidArgument("horizon uncertifiable: I(A) not certified and no override given");
  auto b = regularity_bound(*certified_ia, a.dimension());
  if (!b) throw InvalidArgument("horizon uncertifiable: regularity bound overflows");
  return *b;
}

GradedView postulation(const LocalRing& a, const ParameterSystem& q, std::int64_t horizon) {
  require_full(q);
  const std::size_t d = a.dimension();
  const unsigned w = a.config().window;
  GradedView v;
  v.ring = a.name();
  v.q = q.to_string();
  v.horizon = horizon;
  const std::size_t n0 = static_cast<std::size_t>(std::max<std::int64_t>(horizon, 0)) + 1;
  const std::size_t last = n0 + d + w - 1;
  const Ideal qi = a.ideal(q.elements);
  std::uint64_t prev = 0;
  for (std::size_t n = 0; n <= last; ++n) {
    const auto c = finite(a.colength(a.power(qi, n + 1)), "Q^n");
    v.hilbert.push_back(c - prev);
    prev = c;
  }
  // Newton interpolation through n0..n0+d-1, re-expanded at 0.
  std::vector<std::int64_t> diff;
  for (std::size_t k = 0; k < d; ++k) diff.push_back(static_cast<std::int64_t>(v.hilbert[n0 + k]));
  std::vector<std::int64_t> newton;  // Δ^k h(n0)
  for (std::size_t k = 0; k < d; ++k) {
    newton.push_back(diff[0]);
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.pop_back();
  }
  auto around_n0 = [&](std::int64_t n) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < newton.size(); ++k)
      s += newton[k] * gbinom(n - static_cast<std::int64_t>(n0), static_cast<std::int64_t>(k));
    return s;
  };
  std::vector<std::int64_t> at0;
  for (std::size_t k = 0; k < d; ++k) at0.push_back(around_n0(static_cast<std::int64_t>(k)));
  for (std::size_t k = 0; k < d; ++k) {
    v.coeffs.push_back(at0[0]);
    for (std::size_t j = 0; j + 1 < at0.size(); ++j) at0[j] = at0[j + 1] - at0[j];
    at0.pop_back();
  }
  for (std::size_t n = n0; n <= last; ++n)
    if (static_cast<std::int64_t>(v.hilbert[n]) != v.polynomial(static_cast<std::int64_t>(n)))
      throw Contradiction("Hilbert function not polynomial past the horizon at n=" + std::to_string(n));
  std::size_t p = last + 1;
  while (p > 0 && static_cast<std::int64_t>(v.hilbert[p - 1]) == v.polynomial(static_cast<std::int64_t>(p - 1))) --p;
  v.postulation = p;
  return v;
}

std::uint64_t plus_torsion_length(const LocalRing& a, const ParameterSystem& q, const std::vector<Polynomial>& modded,
                                  unsigned n, unsigned m) {
  require_full(q);
  if (m == 0) throw InvalidArgument("torsion exponent must be positive");
  GradedModel g(a, q, modded);
  return g.torsion(n, m);
}

std::uint64_t plus_torsion_length(const LocalRing& a, const ParameterSystem& q, const std::vector<Polynomial>& modded,
                                  unsigned n) {
  require_full(q);
  std::optional<std::int64_t> ia;
  if (!a.config().horizon) {
    const auto est = invariant_ia(a, q, a.config().n_max_ia);
    if (est.status == IAStatus::Stabilized) ia = est.value;
  }
  return plus_torsion_length(a, q, modded, n, torsion_exponent(graded_horizon(a, ia), n));
}

unsigned torsion_exponent(std::int64_t horizon, unsigned n) {
  return static_cast<unsigned>(std::max<std::int64_t>(1, horizon - static_cast<std::int64_t>(n) + 1));
}

std::uint64_t initial_form_annihilator_length(const LocalRing& a, const ParameterSystem& q,
                                              const std::vector<Polynomial>& modded, const Polynomial& y, unsigned n) {
  require_full(q);
  GradedModel g(a, q, modded);
  return g.annihilator(y, n);
}

namespace {

FilterRegularElement find_filter_regular(const LocalRing& a, const ParameterSystem& q, GradedModel& g,
                                         std::int64_t horizon, std::uint64_t seed) {
  const auto& cfg = a.config();
  const auto& field = a.ring()->field();
  const std::uint32_t p = field.characteristic();
  const std::uint64_t range = p == 0 ? 97 : p - 1;
  std::mt19937_64 rng(seed);
  FilterRegularElement out{Polynomial(a.ring()), {}, 0, 0, 0};
  out.window_begin = static_cast<unsigned>(std::max<std::int64_t>(horizon, -1) + 1);
  out.window_end = out.window_begin + cfg.filter_slack - 1;
  for (unsigned attempt = 1; attempt <= cfg.filter_retries; ++attempt) {
    Polynomial y(a.ring());
    std::vector<Coefficient> cs;
    for (const auto& x : q.elements) {
      Coefficient c(field, static_cast<long>(rng() % range) + 1);
      cs.push_back(c);
      y = y + x.scaled(c);
    }
    if (y.is_zero()) continue;
    const Coefficient lead_inv = y.leading_coeff().inverse();
    y = y.scaled(lead_inv);
    bool ok = true;
    for (unsigned n = out.window_begin; ok && n <= out.window_end; ++n) ok = g.annihilator(y, n) == 0;
    if (ok) {
      out.element = y;
      for (const auto& c : cs) out.coefficients.push_back((c * lead_inv).to_string());
      out.attempts = attempt;
      return out;
    }
  }
  throw CapExceeded("filter-regular retries (window n=" + std::to_string(out.window_begin) + ".." +
                        std::to_string(out.window_end) + ")",
                    cfg.filter_retries);
}

std::uint64_t stage_seed(std::uint64_t seed, std::size_t stage) { return seed + 0x9e3779b97f4a7c15ULL * (stage + 1); }

}  // namespace

FilterRegularElement filter_regular_initial_form(const LocalRing& a, const ParameterSystem& q,
                                                 const std::vector<Polynomial>& modded, std::int64_t horizon,
                                                 std::uint64_t seed) {
  require_full(q);
  GradedModel g(a, q, modded);
  return find_filter_regular(a, q, g, horizon, seed);
}

RegularityCertificate regularity_g(const LocalRing& a, const ParameterSystem& q, std::int64_t horizon) {
  require_full(q);
  const std::size_t d = a.dimension();
  const auto& cfg = a.config();
  RegularityCertificate cert;
  cert.horizon = horizon;
  const unsigned top = static_cast<unsigned>(std::max<std::int64_t>(horizon, 0)) + cfg.filter_slack;
  std::vector<Polynomial> ys;
  for (std::size_t stage = 0; stage <= d; ++stage) {
    GradedModel g(a, q, ys);
    std::vector<std::uint64_t> tors;
    std::optional<std::int64_t> end;
    for (unsigned n = 0; n <= top; ++n) {
      const auto t = g.torsion(n, torsion_exponent(horizon, n));
      tors.push_back(t);
      if (t > 0) {
        if (static_cast<std::int64_t>(n) > horizon)
          throw Contradiction("G_+-torsion in degree " + std::to_string(n) + " beyond the horizon " +
                              std::to_string(horizon) + " at stage " + std::to_string(stage));
        end = n;
      }
    }
    cert.stage_torsion.push_back(std::move(tors));
    cert.stage_ends.push_back(end);
    if (stage < d) {
      auto fr = find_filter_regular(a, q, g, horizon, stage_seed(cfg.seed, stage));
      ys.push_back(fr.element);
      cert.sequence.push_back(std::move(fr));
    }
  }
  for (const auto& e : cert.stage_ends)
    if (e) cert.reg = std::max(cert.reg, *e);
  return cert;
}

RegularityCertificate regularity_g(const LocalRing& a, const ParameterSystem& q,
                                   std::optional<std::int64_t> certified_ia) {
  return regularity_g(a, q, graded_horizon(a, certified_ia));
}

std::vector<BoundEntry> mumford_gap_check(const LocalRing& a, const ParameterSystem& q,
                                          const RegularityCertificate& cert, const GradedView& view,
                                          const std::vector<unsigned>& ns, std::int64_t ia) {
  require_full(q);
  const std::size_t d = a.dimension();
  std::vector<BoundEntry> out;
  const std::string qs = q.to_string();
  if (d < 2) {
    out.push_back(skipped_entry("Lemma2.4", qs, "requires d >= 2"));
    return out;
  }
  if (cert.sequence.empty()) throw InvalidArgument("certificate has no filter-regular element");
  const Polynomial& x = cert.sequence.front().element;
  const std::int64_t horizon = cert.horizon;
  const unsigned m = static_cast<unsigned>(std::max<std::int64_t>(horizon, 0)) + 1;

  // reg(G_Q(A/(x))) with Q/(x) generated by the rest of the sequence; the
  // horizon for A/(x) comes from I(A/(x)) <= I(A).
  std::int64_t reg_quot = 0;
  try {
    LocalRing b = a.quotient({x}, d - 1, a.name() + "/(x)");
    std::vector<Polynomial> rest;
    for (std::size_t k = 1; k < cert.sequence.size(); ++k) rest.push_back(cert.sequence[k].element);
    ParameterSystem qb = validate_parameter_system(b, rest);
    auto hb = regularity_bound(ia, d - 1);
    if (!hb) throw InvalidArgument("horizon uncertifiable for A/(x)");
    reg_quot = regularity_g(b, qb, a.config().horizon ? *a.config().horizon : *hb).reg;
  } catch (const Error& ex) {
    for (unsigned n : ns) out.push_back(error_entry("Lemma2.4", qs, n, m, ex.what()));
    return out;
  }

  const bool depth_positive = zeroth_local_cohomology_length(a) == 0;
  const Ideal qi = a.ideal(q.elements);
  const Ideal& def = a.defining_ideal();
  for (unsigned n : ns) {
    if (static_cast<std::int64_t>(n) < reg_quot) {
      auto e = skipped_entry("Lemma2.4", qs, "below reg(G_Q(A/(x)))=" + std::to_string(reg_quot));
      e.n = n;
      out.push_back(std::move(e));
      continue;
    }
    try {
      const std::int64_t h = static_cast<std::int64_t>(hilbert_g(a, q, n));
      const std::int64_t pn = view.polynomial(n);
      const std::int64_t ln = static_cast<std::int64_t>(plus_torsion_length(a, q, {}, n, torsion_exponent(horizon, n)));
      const std::int64_t lhs = pn - h + ln;
      const auto c1 = a.finite_subquotient_length(ideal_quotient(sum(def, a.power(qi, n + 1)), x), a.power(qi, n));
      const auto c2 = a.finite_subquotient_length(ideal_quotient(sum(def, a.power(qi, n + m + 1)), x.pow(m)),
                                                  a.power(qi, n + 1));
      const std::int64_t rhs = static_cast<std::int64_t>(c1 + c2);
      out.push_back(make_entry("Lemma2.4", qs, n, m, lhs, rhs, "reg(G_Q(A/(x)))=" + std::to_string(reg_quot)));
      if (depth_positive)
        out.push_back(make_entry("Thm2.2", qs, n, std::nullopt, cert.reg, static_cast<std::int64_t>(n) + lhs,
                                 "g-reg = reg since depth A > 0"));
      else {
        auto e = skipped_entry("Thm2.2", qs, "depth A = 0: g-reg may differ from reg");
        e.n = n;
        out.push_back(std::move(e));
      }
    } catch (const Error& ex) {
      out.push_back(error_entry("Lemma2.4", qs, n, m, ex.what()));
    }
  }
  return out;
}

}  // namespace gcmwb
