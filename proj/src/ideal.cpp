#include "gcmwb/ideal.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gcmwb/error.hpp"
#include "linalg.hpp"

namespace gcmwb {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1L);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal_power(RingPtr ring, unsigned n) {
  if (n == 0) return unit(ring);
  const std::size_t s = ring->num_vars();
  std::vector<Polynomial> gens;
  std::vector<unsigned> e(s, 0);
  // All exponent vectors of total degree n.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == s) {
      e[i] = left;
      gens.push_back(Polynomial::monomial(ring, Monomial(std::span<const unsigned>(e))));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::pure_powers(RingPtr ring, unsigned n) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_vars(); ++i)
    gens.push_back(Polynomial::monomial(ring, Monomial::variable(ring->num_vars(), i, n)));
  return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::basis() const { return basis(ring_->order()); }

const GroebnerBasis& Ideal::basis(const MonomialOrder& ord) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& [o, gb] : cache_->bases)
      if (o == ord) return *gb;
  }
  // Computed outside the lock; a concurrent duplicate is identical and the
  // first writer wins.
  RingPtr target = ord == ring_->order() ? ring_ : ring_->with_order(ord);
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  if (target == ring_) {
    gens = gens_;
  } else {
    std::vector<std::size_t> id(ring_->num_vars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    for (const auto& g : gens_) gens.push_back(g.map_to(target, id));
  }
  auto gb = std::make_shared<const GroebnerBasis>(groebner(target, gens));
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& [o, existing] : cache_->bases)
    if (o == ord) return *existing;
  cache_->bases.emplace_back(ord, gb);
  return *gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("membership test across different rings");
  return basis().contains(f);
}

bool Ideal::contains(const Ideal& o) const {
  for (const auto& g : o.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::minimalized() const {
  Ideal out(ring_, basis().generators());
  std::lock_guard<std::mutex> lock(cache_->mu);
  out.cache_ = cache_;
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

namespace {

void check_same(const Ideal& u, const Ideal& v) {
  if (!same_ring(u.ring(), v.ring())) throw RingMismatch("ideals from different rings");
}

// Drops duplicate generators up to scalars (cheap tidy-up for products).
std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    bool seen = false;
    for (const auto& h : out)
      if (h == m) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> identity_map(std::size_t n, std::size_t shift = 0) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + shift;
  return v;
}

}  // namespace

Ideal sum(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  auto g = u.generators();
  g.insert(g.end(), v.generators().begin(), v.generators().end());
  return Ideal(u.ring(), std::move(g));
}

Ideal product(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  std::vector<Polynomial> g;
  for (const auto& a : u.generators())
    for (const auto& b : v.generators()) g.push_back(a * b);
  return Ideal(u.ring(), dedupe(std::move(g)));
}

Ideal power(const Ideal& u, unsigned n) {
  if (n == 0) return Ideal::unit(u.ring());
  Ideal r = u;
  for (unsigned k = 1; k < n; ++k) r = product(r, u);
  return r;
}

Ideal ideal_combine(const Ideal& u, const Ideal& v, CombineOp op, unsigned n) {
  switch (op) {
    case CombineOp::Sum:
      return sum(u, v);
    case CombineOp::Product:
      return product(u, v);
    case CombineOp::Power:
      return power(u, n);
  }
  throw InvalidArgument("unknown combine operation");
}

Ideal eliminate(const Ideal& u, const std::vector<std::size_t>& drop) {
  const RingPtr& ring = u.ring();
  const std::size_t s = ring->num_vars();
  std::vector<bool> is_drop(s, false);
  for (auto i : drop) {
    if (i >= s) throw InvalidArgument("elimination variable out of range");
    is_drop[i] = true;
  }
  std::size_t front = 0;
  for (bool b : is_drop) front += b;
  if (front == 0) return u;
  // perm[position] = variable; dropped variables first.
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < s; ++i)
    if (is_drop[i]) perm.push_back(i);
  for (std::size_t i = 0; i < s; ++i)
    if (!is_drop[i]) perm.push_back(i);
  const auto ord = MonomialOrder::block(front).permuted(perm);
  const GroebnerBasis& gb = u.basis(ord);
  std::vector<Polynomial> keep;
  const auto id = identity_map(s);
  for (const auto& g : gb.generators()) {
    bool uses = false;
    for (std::size_t i = 0; i < s && !uses; ++i) uses = is_drop[i] && g.involves(i);
    if (!uses) keep.push_back(g.map_to(ring, id));
  }
  return Ideal(ring, std::move(keep));
}

Ideal change_ring(const Ideal& u, const RingPtr& target, const std::vector<std::size_t>& var_map) {
  std::vector<Polynomial> g;
  for (const auto& f : u.generators()) g.push_back(f.map_to(target, var_map));
  return Ideal(target, std::move(g));
}

Ideal intersect(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  const RingPtr& ring = u.ring();
  if (u.is_zero() || v.is_zero()) return Ideal::zero(ring);
  if (u.is_unit()) return v;
  if (v.is_unit()) return u;
  const std::size_t s = ring->num_vars();
  if (s + 1 > kMaxVariables) throw InvalidArgument("too many variables for an intersection");
  std::vector<std::string> vars{"_t"};
  for (const auto& x : ring->variables()) vars.push_back(x);
  RingPtr ext = PolyRing::make(ring->field(), vars, MonomialOrder::block(1));
  const auto up = identity_map(s, 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1L) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : u.generators()) gens.push_back(t * f.map_to(ext, up));
  for (const auto& f : v.generators()) gens.push_back(one_minus_t * f.map_to(ext, up));
  const GroebnerBasis gb = groebner(ext, gens);
  std::vector<std::size_t> down(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) down[i + 1] = i;
  std::vector<Polynomial> keep;
  for (const auto& g : gb.generators())
    if (!g.involves(0)) keep.push_back(g.map_to(ring, down));
  return Ideal(ring, std::move(keep));
}

std::vector<Monomial> standard_monomials(const Ideal& u) {
  const GroebnerBasis& gb = u.basis();
  if (gb.is_unit()) return {};
  const std::size_t s = u.ring()->num_vars();
  if (krull_dimension(u) != 0) throw InvalidArgument("standard monomials of a positive-dimensional ideal");
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier{Monomial(s)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (gb.reducer_for(m)) continue;
      out.push_back(m);
      for (std::size_t i = 0; i < s; ++i) {
        Monomial n = m * Monomial::variable(s, i);
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  const auto& ord = u.ring()->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

Ideal ideal_quotient_by_elimination(const Ideal& u, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("quotient by the zero polynomial");
  const RingPtr& ring = u.ring();
  if (u.contains(f)) return Ideal::unit(ring);
  Ideal inter = intersect(u, Ideal(ring, {f}));
  std::vector<Polynomial> g;
  for (const auto& h : inter.generators()) g.push_back(exact_divide(h, f));
  return Ideal(ring, std::move(g));
}

namespace {

// U : (f_1..f_k) for zero-dimensional U: the common kernel of multiplication
// by every f_j on the standard monomials of k[x]/U.
Ideal quotient_zero_dim(const Ideal& u, const std::vector<Polynomial>& fs) {
  const RingPtr& ring = u.ring();
  const GroebnerBasis& gb = u.basis();
  const auto basis = standard_monomials(u);
  const Field field = ring->field();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  const std::size_t n = basis.size();
  // Block j, row r: coefficient of basis[r] in NF(f_j * basis[c]).
  std::vector<linalg::Row> rows(n * fs.size(), linalg::Row(n, Coefficient::zero(field)));
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial img = gb.normal_form(fs[j].times_term(basis[c], Coefficient::one(field)));
      for (const auto& t : img.terms()) rows[j * n + index.at(t.mono)][c] = t.coeff;
    }
  auto kernel = linalg::nullspace(field, std::move(rows), n);
  std::vector<Polynomial> gens = gb.generators();
  for (const auto& v : kernel) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) terms.push_back({basis[k], v[k]});
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens)).minimalized();
}

}  // namespace

Ideal ideal_quotient(const Ideal& u, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("quotient by the zero polynomial");
  if (!same_ring(u.ring(), f.ring())) throw RingMismatch("quotient across different rings");
  const RingPtr& ring = u.ring();
  if (u.contains(f)) return Ideal::unit(ring);
  if (u.is_zero()) return u;
  if (f.is_constant()) return u;
  if (krull_dimension(u) != 0) return ideal_quotient_by_elimination(u, f);
  return quotient_zero_dim(u, {f});
}

Ideal ideal_quotient(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  if (v.is_zero() || u.contains(v)) return Ideal::unit(u.ring());
  if (!u.is_zero() && !u.is_unit() && krull_dimension(u) == 0) return quotient_zero_dim(u, v.generators());
  std::optional<Ideal> acc;
  for (const auto& g : v.generators()) {
    Ideal q = ideal_quotient(u, g);
    acc = acc ? intersect(*acc, q) : q;
    if (acc->equals(u)) break;
  }
  return *acc;
}

Saturation saturate(const Ideal& u, const Ideal& v, unsigned cap) {
  if (v.is_zero()) throw InvalidArgument("saturation by the zero ideal");
  Ideal cur = u;
  for (unsigned e = 0; e <= cap; ++e) {
    Ideal next = ideal_quotient(cur, v);
    if (cur.contains(next)) return {cur, e};
    cur = next;
  }
  throw CapExceeded("saturation", cap);
}

IntPoly hilbert_numerator(const Ideal& u) {
  const GroebnerBasis& gb = u.basis(MonomialOrder::degrevlex());
  return hilbert_numerator(gb.leading_monomials(), u.ring()->num_vars());
}

std::size_t krull_dimension(const Ideal& u) {
  const GroebnerBasis& gb = u.basis();
  if (gb.is_unit()) return 0;
  const std::size_t s = u.ring()->num_vars();
  return dimension_from_numerator(hilbert_numerator(gb.leading_monomials(), s), s);
}

std::optional<std::uint64_t> kdim_quotient(const Ideal& u) {
  const GroebnerBasis& gb = u.basis();
  if (gb.is_unit()) return 0;
  const std::size_t s = u.ring()->num_vars();
  auto [q, times] = divide_by_one_minus_t(hilbert_numerator(gb.leading_monomials(), s), s);
  if (times < s) return std::nullopt;
  std::int64_t total = 0;
  for (auto c : q) total += c;
  return static_cast<std::uint64_t>(total);
}

std::uint64_t affine_hilbert(const Ideal& u, std::uint64_t t, const MonomialOrder& ord) {
  if (!ord.refines_degree())
    throw InvalidArgument("affine Hilbert function needs a degree-compatible order, got " + ord.to_string());
  const GroebnerBasis& gb = u.basis(ord);
  if (gb.is_unit()) return 0;
  const std::size_t s = u.ring()->num_vars();
  return static_cast<std::uint64_t>(
      cumulative_hilbert_value(hilbert_numerator(gb.leading_monomials(), s), s, static_cast<std::int64_t>(t)));
}

bool contained_in_max_ideal(const Ideal& u) {
  for (const auto& g : u.generators())
    if (!constant_term(g).is_zero()) return false;
  return true;
}

}  // namespace gcmwb
