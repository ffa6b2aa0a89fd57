#include "gcmwb/rees.hpp"

#include <algorithm>
#include <map>

#include "gcmwb/error.hpp"

namespace gcmwb {

unsigned t_degree(const Polynomial& f, std::size_t s) {
  if (f.is_zero()) return 0;
  unsigned deg = 0;
  const auto& m = f.terms().front().mono;
  for (std::size_t i = s; i < m.num_vars(); ++i) deg += m[i];
  return deg;
}

namespace {

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& stem, std::size_t n) {
  std::string prefix = stem;
  auto clash = [&](const std::string& p) {
    for (std::size_t j = 1; j <= n; ++j)
      if (std::find(taken.begin(), taken.end(), p + std::to_string(j)) != taken.end()) return true;
    return false;
  };
  while (clash(prefix)) prefix = "_" + prefix;
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(prefix + std::to_string(j));
  return out;
}

// Splits f into T-homogeneous components.
std::vector<Polynomial> t_components(const Polynomial& f, std::size_t s) {
  std::map<unsigned, std::vector<Term>> parts;
  for (const auto& t : f.terms()) {
    unsigned deg = 0;
    for (std::size_t i = s; i < t.mono.num_vars(); ++i) deg += t.mono[i];
    parts[deg].push_back(t);
  }
  std::vector<Polynomial> out;
  for (auto& [deg, terms] : parts) out.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  return out;
}

// f ∈ K localized at k[x] \ m: some element of (K : f) ∩ k[x] is a unit locally.
bool locally_in(const Ideal& k, const Polynomial& f, std::size_t s) {
  if (k.contains(f)) return true;
  const std::size_t nv = k.ring()->num_vars();
  std::vector<bool> positive(nv, false);
  for (std::size_t i = 0; i < s; ++i) positive[i] = true;
  if (positively_graded(k.generators(), positive)) return false;
  std::vector<std::size_t> drop;
  for (std::size_t i = s; i < nv; ++i) drop.push_back(i);
  const Ideal base = eliminate(ideal_quotient(k, f), drop);
  return !contained_in_max_ideal(base);
}

}  // namespace

ReesPresentation rees_presentation(const LocalRing& a, const ParameterSystem& q) {
  if (!q.full) throw InvalidArgument("a full system of parameters is required");
  const RingPtr& base = a.ring();
  const std::size_t s = base->num_vars(), d = q.size();
  auto vars = base->variables();
  auto ts = fresh_names(vars, "T", d);
  vars.insert(vars.end(), ts.begin(), ts.end());
  ReesPresentation out;
  out.variables = vars;
  out.ring = PolyRing::make(base->field(), vars);
  auto ext_vars = vars;
  ext_vars.push_back(fresh_names(vars, "t", 1).front());
  const RingPtr ext = PolyRing::make(base->field(), ext_vars);

  std::vector<std::size_t> embed(s);
  for (std::size_t i = 0; i < s; ++i) embed[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : a.defining_ideal().generators()) gens.push_back(g.map_to(ext, embed));
  const Polynomial t = Polynomial::variable(ext, s + d);
  for (std::size_t j = 0; j < d; ++j)
    gens.push_back(Polynomial::variable(ext, s + j) - t * q.elements[j].map_to(ext, embed));
  const Ideal elim = eliminate(Ideal(ext, std::move(gens)), {s + d});

  std::vector<std::size_t> back(s + d + 1);
  for (std::size_t i = 0; i < s + d; ++i) back[i] = i;
  back[s + d] = 0;  // t no longer occurs
  for (const auto& g : elim.generators())
    for (auto& c : t_components(g.map_to(out.ring, back), s)) out.ideal.push_back(c.monic());
  std::stable_sort(out.ideal.begin(), out.ideal.end(), [&](const Polynomial& x, const Polynomial& y) {
    const unsigned dx = t_degree(x, s), dy = t_degree(y, s);
    if (dx != dy) return dx < dy;
    return out.ring->order().greater(y.leading_monomial(), x.leading_monomial());
  });

  // Greedy minimal generators: keep an element unless it is locally inside
  // the ideal of the elements kept so far (all of lower or equal T-degree).
  std::vector<Polynomial> kept;
  for (const auto& f : out.ideal) {
    if (!kept.empty() && locally_in(Ideal(out.ring, kept), f, s)) continue;
    kept.push_back(f);
  }
  // Drop elements of the same degree made redundant by later ones of that degree.
  for (std::size_t k = kept.size(); k-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    if (!others.empty() && locally_in(Ideal(out.ring, others), kept[k], s)) kept.erase(kept.begin() + k);
  }
  out.minimal = kept;
  out.reltype = 1;
  for (const auto& f : kept) {
    const unsigned deg = t_degree(f, s);
    out.minimal_degrees.push_back(deg);
    out.reltype = std::max(out.reltype, deg);
  }
  return out;
}

unsigned principal_reltype(const LocalRing& a, const Polynomial& x) {
  if (a.dimension() != 1) throw InvalidArgument("principal_reltype needs a one-dimensional ring");
  const Ideal zero = Ideal::zero(a.ring());
  const unsigned cap = a.config().cap_fit;
  std::uint64_t prev = 0;
  unsigned last_change = 1;
  for (unsigned n = 1; n <= cap; ++n) {
    const auto len = a.finite_subquotient_length(ideal_quotient(a.defining_ideal(), x.pow(n)), zero);
    if (len == prev && n > 1) return last_change;
    if (len != prev) last_change = n;
    prev = len;
  }
  throw CapExceeded("annihilator chain", cap);
}

}  // namespace gcmwb
