#include "gcmwb/local_ring.hpp"

#include <algorithm>
#include <random>

#include "gcmwb/error.hpp"
#include "gcmwb/parse.hpp"

namespace gcmwb {

RingPresentation make_presentation(std::string name, std::uint32_t characteristic,
                                   std::vector<std::string> variables,
                                   const std::vector<std::string>& relations) {
  Field f = characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
  RingPtr ring = PolyRing::make(f, std::move(variables));
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(ring, r));
  return {std::move(name), ring, std::move(rel)};
}

ParameterSystem ParameterSystem::prefix(std::size_t k) const {
  if (k > elements.size()) throw InvalidArgument("prefix longer than the parameter system");
  ParameterSystem p;
  p.elements.assign(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(k));
  p.full = full && k == elements.size();
  return p;
}

std::string ParameterSystem::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? ", " : "") + elements[i].to_string();
  return s + ")";
}

namespace {

bool all_homogeneous(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::string key_of(const Ideal& j) {
  std::vector<std::string> parts;
  for (const auto& g : j.generators()) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::string k;
  for (const auto& p : parts) k += p + ";";
  return k;
}

// x_i nilpotent modulo K for every i, checked within `bound` multiplications.
bool all_variables_nilpotent(const Ideal& k, std::uint64_t bound) {
  const RingPtr& ring = k.ring();
  const GroebnerBasis& gb = k.basis();
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    const Polynomial x = Polynomial::variable(ring, i);
    Polynomial p = gb.normal_form(x);
    std::uint64_t steps = 1;
    while (!p.is_zero() && steps <= bound) {
      p = gb.normal_form(p * x);
      ++steps;
    }
    if (!p.is_zero()) return false;
  }
  return true;
}

// Smallest k such that the last w entries of the k-th difference sequence are
// equal; nullopt if no k <= max_k qualifies.
std::optional<std::size_t> stable_difference_order(std::vector<std::int64_t> v, std::size_t w, std::size_t max_k) {
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (v.size() < w) return std::nullopt;
    bool constant = true;
    for (std::size_t i = v.size() - w + 1; i < v.size(); ++i) constant = constant && v[i] == v[i - 1];
    if (constant) return k;
    std::vector<std::int64_t> d;
    for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
    v = std::move(d);
  }
  return std::nullopt;
}

Polynomial random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  const std::uint32_t p = ring->field().characteristic();
  std::uniform_int_distribution<long> dist(1, p == 0 ? 9 : static_cast<long>(p) - 1);
  std::vector<Term> t;
  for (std::size_t i = 0; i < ring->num_vars(); ++i)
    t.push_back({Monomial::variable(ring->num_vars(), i), Coefficient(ring->field(), dist(rng))});
  return Polynomial::from_terms(ring, std::move(t));
}

// Local length of k[x]/K at the origin.
Length local_colength(const Ideal& k, const EngineConfig& cfg) {
  if (k.is_unit()) return 0;
  if (auto kd = kdim_quotient(k)) {
    if (all_variables_nilpotent(k, *kd)) return *kd;
  }
  // The origin must be an isolated point of V(K): K : m^∞ not inside m.
  Ideal sat = saturate_at_origin(k);
  if (contained_in_max_ideal(sat.minimalized())) return std::nullopt;
  // Truncate with (x_1^N..x_s^N); D_N = D_2N forces (x^N) = 0 locally
  // (Nakayama), so the count is exact.
  std::optional<std::uint64_t> prev;
  for (unsigned n = 1; n <= cfg.cap_trunc; n *= 2) {
    auto d = kdim_quotient(sum(k, Ideal::pure_powers(k.ring(), n)));
    if (!d) throw Error("truncated ideal has infinite colength");
    if (prev && *prev == *d) return d;
    prev = d;
  }
  throw CapExceeded("truncation", cfg.cap_trunc);
}

}  // namespace

bool positively_graded(const std::vector<Polynomial>& gens, const std::vector<bool>& positive) {
  if (gens.empty()) return true;
  const std::size_t s = positive.size();
  // Differences of exponent vectors that must be weight-orthogonal.
  std::vector<std::vector<int>> diffs;
  for (const auto& g : gens) {
    const auto& t = g.terms();
    for (std::size_t k = 1; k < t.size(); ++k) {
      std::vector<int> v(s);
      for (std::size_t i = 0; i < s; ++i) v[i] = int(t[k].mono[i]) - int(t[0].mono[i]);
      diffs.push_back(std::move(v));
    }
  }
  if (diffs.empty()) return true;
  constexpr int kMaxWeight = 4;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < s; ++i) {
    combos *= positive[i] ? kMaxWeight : kMaxWeight + 1;
    if (combos > 200000) return false;
  }
  std::vector<int> w(s);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t r = c;
    for (std::size_t i = 0; i < s; ++i) {
      const int base = positive[i] ? kMaxWeight : kMaxWeight + 1;
      w[i] = static_cast<int>(r % base) + (positive[i] ? 1 : 0);
      r /= base;
    }
    bool ok = true;
    for (const auto& v : diffs) {
      long dot = 0;
      for (std::size_t i = 0; i < s; ++i) dot += long(v[i]) * w[i];
      if (dot != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Ideal saturate_by_element(const Ideal& k, const Polynomial& f) {
  const RingPtr& ring = k.ring();
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  const std::size_t s = ring->num_vars();
  if (s + 1 > kMaxVariables) throw InvalidArgument("too many variables for a saturation");
  std::vector<std::string> vars{"_s"};
  for (const auto& x : ring->variables()) vars.push_back(x);
  RingPtr ext = PolyRing::make(ring->field(), vars, MonomialOrder::block(1));
  std::vector<std::size_t> up(s), down(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : k.generators()) gens.push_back(g.map_to(ext, up));
  gens.push_back(Polynomial::constant(ext, 1L) - Polynomial::variable(ext, 0) * f.map_to(ext, up));
  const GroebnerBasis gb = groebner(ext, gens);
  std::vector<Polynomial> keep;
  for (const auto& g : gb.generators())
    if (!g.involves(0)) keep.push_back(g.map_to(ring, down));
  return Ideal(ring, std::move(keep));
}

Ideal saturate_at_origin(const Ideal& k) {
  const RingPtr& ring = k.ring();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    Ideal part = saturate_by_element(k, Polynomial::variable(ring, i));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

std::size_t local_dimension(const Ideal& defining, const EngineConfig& cfg) {
  const RingPtr& ring = defining.ring();
  const std::size_t s = ring->num_vars();
  if (all_homogeneous(defining.generators())) return krull_dimension(defining);
  // ℓ(A/m^n) = kdim(I + m^n); its degree in n is d.
  std::vector<std::int64_t> values;
  std::optional<std::size_t> last;
  unsigned agree = 0;
  for (unsigned n = 1; n <= cfg.cap_fit; ++n) {
    auto d = kdim_quotient(sum(defining, Ideal::maximal_power(ring, n)));
    values.push_back(static_cast<std::int64_t>(*d));
    if (values.size() < s + cfg.window + 1) continue;
    auto k = stable_difference_order(values, cfg.window, s);
    if (k && last == k) {
      if (++agree >= cfg.window) return *k;
    } else {
      agree = 0;
    }
    last = k;
  }
  throw CapExceeded("dimension fit", cfg.cap_fit);
}

LocalRing make_local_ring(const RingPresentation& p, const EngineConfig& cfg) {
  if (!p.ring) throw InvalidArgument("presentation without a polynomial ring");
  for (const auto& g : p.relations) {
    if (!same_ring(g.ring(), p.ring)) throw RingMismatch("relation from a different ring");
    if (!constant_term(g).is_zero()) throw InvalidArgument("generator has nonzero constant term: " + g.to_string());
  }
  auto state = std::make_shared<LocalRing::State>(p, cfg);
  state->dim = local_dimension(state->defining, cfg);
  return LocalRing(std::move(state));
}

LocalRing LocalRing::with_config(const EngineConfig& cfg) const {
  auto s = std::make_shared<State>(state_->pres, cfg);
  s->dim = state_->dim;
  return LocalRing(std::move(s));
}

Ideal LocalRing::reduce(const Ideal& j) const {
  const GroebnerBasis& gb = defining_ideal().basis();
  std::vector<Polynomial> out;
  for (const auto& g : j.generators()) {
    Polynomial r = gb.normal_form(g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return Ideal(ring(), std::move(out));
}

Ideal LocalRing::power(const Ideal& j, unsigned n) const {
  if (n == 0) return Ideal::unit(ring());
  const std::string base = key_of(j);
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->powers.find(base + "^" + std::to_string(n));
    if (it != state_->powers.end()) return it->second;
  }
  Ideal r = n == 1 ? reduce(j) : reduce(product(power(j, n - 1), reduce(j)));
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->powers.emplace(base + "^" + std::to_string(n), r);
  return r;
}

Length LocalRing::colength(const Ideal& j) const {
  Ideal k = sum(defining_ideal(), j);
  const std::string key = key_of(j);
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->colengths.find(key);
    if (it != state_->colengths.end()) return it->second;
  }
  Length r = local_colength(k, config());
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->colengths.emplace(key, r);
  return r;
}

bool LocalRing::locally_contains(const Ideal& k, const Polynomial& f) const {
  Ideal full = sum(defining_ideal(), k);
  if (full.contains(f)) return true;
  if (positively_graded(full.generators(), std::vector<bool>(num_vars(), true))) return false;
  return !contained_in_max_ideal(ideal_quotient(full, f));
}

bool LocalRing::locally_contains(const Ideal& k, const Ideal& sub) const {
  for (const auto& g : sub.generators())
    if (!locally_contains(k, g)) return false;
  return true;
}

std::uint64_t LocalRing::finite_subquotient_length(const Ideal& u, const Ideal& v) const {
  const Ideal vi = sum(defining_ideal(), v);
  const Ideal ui = sum(defining_ideal(), u);
  if (!ui.contains(v)) throw InvalidArgument("subquotient: V is not contained in U");
  if (vi.contains(u)) return 0;
  if (auto cv = colength(v)) {
    auto cu = colength(u);
    if (!cu) throw Error("subquotient: colength of the larger ideal is infinite");
    if (*cu > *cv) throw InvalidArgument("subquotient: V is not contained in U");
    return *cv - *cu;
  }
  // m-torsion of (U + I)/(V + I), counted through Hilbert series.
  const Ideal w = intersect(saturate_at_origin(vi), ui);
  for (const auto& g : ui.generators()) {
    if (w.contains(g)) continue;
    if (contained_in_max_ideal(ideal_quotient(w, g)))
      throw Error("subquotient has infinite local length");
  }
  const std::size_t s = num_vars();
  IntPoly nv = hilbert_numerator(vi);
  IntPoly nw = hilbert_numerator(w);
  IntPoly diff(std::max(nv.size(), nw.size()), 0);
  for (std::size_t i = 0; i < nv.size(); ++i) diff[i] += nv[i];
  for (std::size_t i = 0; i < nw.size(); ++i) diff[i] -= nw[i];
  auto [q, times] = divide_by_one_minus_t(diff, s);
  std::int64_t total = 0;
  for (auto c : q) total += c;
  if (times < s && total != 0) throw Error("subquotient Hilbert series has a pole");
  if (total < 0) throw Error("negative subquotient length");
  return static_cast<std::uint64_t>(total);
}

LocalRing LocalRing::quotient(const std::vector<Polynomial>& elements, std::optional<std::size_t> expected_dim,
                              std::string name) const {
  RingPresentation p = presentation();
  p.name = name.empty() ? p.name + "/J" : std::move(name);
  const Ideal extra = reduce(ideal(elements));
  for (const auto& e : extra.generators()) p.relations.push_back(e);
  for (const auto& g : p.relations)
    if (!constant_term(g).is_zero()) throw InvalidParameterSystem("quotient by an element outside m");
  auto state = std::make_shared<State>(p, config());
  if (all_homogeneous(p.relations) || !expected_dim) {
    state->dim = local_dimension(state->defining, config());
  } else {
    // The caller's Krull lower bound plus a certified upper bound: a finite
    // colength after adding expected_dim random linear forms.
    std::mt19937_64 rng(config().seed ^ 0x9e3779b97f4a7c15ULL);
    bool certified = false;
    for (unsigned attempt = 0; attempt < config().filter_retries && !certified; ++attempt) {
      std::vector<Polynomial> forms;
      for (std::size_t k = 0; k < *expected_dim; ++k) forms.push_back(random_linear_form(ring(), rng));
      certified = local_colength(sum(state->defining, ideal(forms)), config()).has_value();
    }
    if (!certified) throw InvalidParameterSystem("dimension of the quotient exceeds " + std::to_string(*expected_dim));
    state->dim = *expected_dim;
  }
  if (expected_dim && state->dim != *expected_dim)
    throw InvalidParameterSystem("quotient has dimension " + std::to_string(state->dim) + ", expected " +
                                 std::to_string(*expected_dim));
  return LocalRing(std::move(state));
}

Length colength(const LocalRing& a, const Ideal& j) { return a.colength(j); }

std::uint64_t finite_subquotient_length(const LocalRing& a, const Ideal& u, const Ideal& v) {
  return a.finite_subquotient_length(u, v);
}

ParameterSystem validate_parameter_system(const LocalRing& a, const std::vector<Polynomial>& xs) {
  const std::size_t d = a.dimension();
  if (xs.size() > d)
    throw InvalidParameterSystem("too many elements: " + std::to_string(xs.size()) + " > dim " + std::to_string(d));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!same_ring(xs[k].ring(), a.ring())) throw RingMismatch("parameter from a different ring");
    if (!constant_term(xs[k]).is_zero())
      throw InvalidParameterSystem("element " + std::to_string(k + 1) + " is not in the maximal ideal");
  }
  ParameterSystem ps{xs, xs.size() == d};
  if (ps.full) {
    if (!a.colength(a.ideal(xs))) throw InvalidParameterSystem("colength is infinite: not a system of parameters");
    return ps;
  }
  if (xs.empty()) return ps;
  try {
    a.quotient(xs, d - xs.size());
  } catch (const InvalidParameterSystem& e) {
    throw InvalidParameterSystem(std::string("dimension does not drop to d - i: ") + e.what());
  }
  return ps;
}

}  // namespace gcmwb
