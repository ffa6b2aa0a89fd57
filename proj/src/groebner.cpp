#include "gcmwb/groebner.hpp"

#include <algorithm>

#include "gcmwb/error.hpp"

namespace gcmwb {

namespace {

// Full reduction loop shared by normal forms and Buchberger.
template <class FindReducer>
Polynomial reduce_with(const Polynomial& f, FindReducer find) {
  const RingPtr& ring = f.ring();
  const auto& ord = ring->order();
  std::vector<Term> work = f.terms();
  std::vector<Term> rem;
  std::vector<Term> buf;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& lt = work[pos];
    const Polynomial* g = find(lt.mono);
    if (!g) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Monomial m = lt.mono / g->leading_monomial();
    const Coefficient c = g->leading_coeff().is_one() ? lt.coeff : lt.coeff / g->leading_coeff();
    const auto& gt = g->terms();
    buf.clear();
    buf.reserve(work.size() - pos + gt.size());
    std::size_t i = pos + 1, j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial bm = gt[j].mono * m;
      auto cmp = ord.compare(work[i].mono, bm);
      if (cmp == std::strong_ordering::greater) {
        buf.push_back(std::move(work[i++]));
      } else if (cmp == std::strong_ordering::less) {
        buf.push_back({bm, -(gt[j].coeff * c)});
        ++j;
      } else {
        Coefficient s = work[i].coeff - gt[j].coeff * c;
        if (!s.is_zero()) buf.push_back({bm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) buf.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j) buf.push_back({gt[j].mono * m, -(gt[j].coeff * c)});
    work.swap(buf);
    pos = 0;
  }
  return Polynomial::from_sorted_terms(ring, std::move(rem));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)), ord_(ring_->order()) {}

  void add_input(const Polynomial& f) {
    Polynomial h = reduce(f);
    if (h.is_zero()) return;
    insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it)
        if (before(*it, *best)) best = it;
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Polynomial s = spoly(polys_[p.i], polys_[p.j], p.lcm);
      Polynomial h = reduce(s);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) g.push_back(polys_[k]);
    // Minimalize, then inter-reduce tails.
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });
    std::vector<Polynomial> minimal;
    for (const auto& f : g) {
      bool redundant = false;
      for (const auto& h : minimal)
        if (h.leading_monomial().divides(f.leading_monomial())) redundant = true;
      if (!redundant) minimal.push_back(f);
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      const Polynomial& f = minimal[k];
      std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
      Polynomial t = Polynomial::from_sorted_terms(ring_, std::move(tail));
      Polynomial r = reduce_with(t, [&](const Monomial& m) -> const Polynomial* {
        for (std::size_t q = 0; q < minimal.size(); ++q)
          if (q != k && minimal[q].leading_monomial().divides(m)) return &minimal[q];
        return nullptr;
      });
      std::vector<Term> terms;
      terms.reserve(r.size() + 1);
      terms.push_back(f.leading_term());
      for (const auto& x : r.terms()) terms.push_back(x);
      out.push_back(Polynomial::from_sorted_terms(ring_, std::move(terms)));
    }
    return out;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ord_.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& l) const {
    // Both inputs are monic.
    Polynomial a = f.times_term(l / f.leading_monomial(), Coefficient::one(ring_->field()));
    return a.minus_multiple(Coefficient::one(ring_->field()), l / g.leading_monomial(), g);
  }

  Polynomial reduce(const Polynomial& f) const {
    return reduce_with(f, [&](const Monomial& m) -> const Polynomial* {
      const std::uint32_t mask = m.support_mask();
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (!active_[k] || (masks_[k] & ~mask)) continue;
        if (polys_[k].leading_monomial().divides(m)) return &polys_[k];
      }
      return nullptr;
    });
  }

  // Gebauer–Möller update for a new basis element h.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    masks_.push_back(lh.support_mask());
    active_.push_back(false);

    std::vector<Pair> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) c.push_back({k, hi, lh.lcm(polys_[k].leading_monomial())});

    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      const bool coprime = lh.coprime(polys_[p.i].leading_monomial());
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d)
      if (!lh.coprime(polys_[p.i].leading_monomial())) e.push_back(p);

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(lh.lcm(polys_[p.i].leading_monomial()) == p.lcm) &&
                        !(lh.lcm(polys_[p.j].leading_monomial()) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_.swap(kept);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    active_[hi] = true;
  }

  RingPtr ring_;
  const MonomialOrder& ord_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens, bool reduced)
    : ring_(std::move(ring)), gens_(std::move(gens)), reduced_(reduced) {
  masks_.reserve(gens_.size());
  for (const auto& g : gens_) masks_.push_back(g.leading_monomial().support_mask());
}

bool GroebnerBasis::is_unit() const noexcept {
  return gens_.size() == 1 && gens_[0].leading_monomial().is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

const Polynomial* GroebnerBasis::reducer_for(const Monomial& m) const noexcept {
  const std::uint32_t mask = m.support_mask();
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (masks_[k] & ~mask) continue;
    if (gens_[k].leading_monomial().divides(m)) return &gens_[k];
  }
  return nullptr;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("normal form across different rings");
  return reduce_with(f, [this](const Monomial& m) { return reducer_for(m); });
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f); }

Polynomial reduce_by(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  return reduce_with(f, [&](const Monomial& m) -> const Polynomial* {
    for (const auto* d : divisors)
      if (!d->is_zero() && d->leading_monomial().divides(m)) return d;
    return nullptr;
  });
}

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  Buchberger bb(ring);
  std::vector<Polynomial> inputs;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generator from a different ring");
    if (!g.is_zero()) inputs.push_back(g);
  }
  // Feed low-degree inputs first so early reductions stay cheap.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order().compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
  });
  for (const auto& g : inputs) {
    if (g.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1L)}, true);
    bb.add_input(g);
  }
  bb.run();
  auto basis = bb.reduced_basis();
  if (!basis.empty() && basis.front().is_constant())
    return GroebnerBasis(ring, {Polynomial::constant(ring, 1L)}, true);
  return GroebnerBasis(ring, std::move(basis), true);
}

}  // namespace gcmwb
