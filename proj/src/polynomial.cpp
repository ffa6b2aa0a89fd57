#include "gcmwb/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "gcmwb/error.hpp"

namespace gcmwb {

RingPtr PolyRing::make(Field field, std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw InvalidArgument("a polynomial ring needs at least one variable");
  if (variables.size() > kMaxVariables)
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j]) throw InvalidArgument("duplicate variable " + variables[i]);
  return RingPtr(new PolyRing(field, std::move(variables), std::move(order)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return RingPtr(new PolyRing(field_, vars_, std::move(order)));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void Polynomial::check_same(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials from different rings");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.num_vars() != ring->num_vars()) throw RingMismatch("monomial arity mismatch");
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Coefficient k(ring->field(), c);
  return constant(std::move(ring), k);
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({Monomial(ring->num_vars()), c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring->num_vars(), index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m) {
  Coefficient one = Coefficient::one(ring->field());
  return Polynomial(std::move(ring), std::vector<Term>{{m, one}});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::order_at_origin() const noexcept {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

namespace {

// Merge two sorted term lists into a + b or a - b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                        const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ord.compare(a[i].mono, b[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Coefficient s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  return Polynomial(ring_, merge(terms_, o.terms_, false, ring_->order()));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(o);
  return Polynomial(ring_, merge(terms_, o.terms_, true, ring_->order()));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono, -x.coeff});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      Coefficient c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, std::move(c));
      else
        it->second += c;
    }
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) t.push_back({m, c});
  const auto& ord = ring_->order();
  std::sort(t.begin(), t.end(), [&](const Term& x, const Term& y) { return ord.greater(x.mono, y.mono); });
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono, x.coeff * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::times_term(const Monomial& m, const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, x.coeff * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1L);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::minus_multiple(const Coefficient& c, const Monomial& m,
                                      const Polynomial& g) const {
  const auto& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({bm, -(b[j].coeff * c)});
      ++j;
    } else {
      Coefficient s = a[i].coeff - b[j].coeff * c;
      if (!s.is_zero()) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, -(b[j].coeff * c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->num_vars()) throw InvalidArgument("variable map has wrong length");
  if (!(target->field() == ring_->field())) throw RingMismatch("field mismatch in ring map");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < var_map.size(); ++i)
      if (x.mono[i]) m.set(var_map[i], m[var_map[i]] + x.mono[i]);
    t.push_back({m, x.coeff});
  }
  return from_terms(target, std::move(t));
}

bool Polynomial::involves(std::size_t index) const noexcept {
  for (const auto& t : terms_)
    if (t.mono[index]) return true;
  return false;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.prints_negative();
    std::string c = neg ? (-t.coeff).to_string() : t.coeff.to_string();
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += monomial_to_string(t.mono, ring_->variables());
    }
  }
  return s;
}

// 1 is the smallest monomial in every order, so only the last slot can hold it.
Coefficient constant_term(const Polynomial& f) {
  if (!f.is_zero() && f.terms().back().mono.is_one()) return f.terms().back().coeff;
  return Coefficient::zero(f.ring()->field());
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return a;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Polynomial q(f.ring());
  Polynomial r = f;
  const Coefficient inv = g.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw InvalidArgument("polynomial division is not exact");
    Monomial m = lt.mono / g.leading_monomial();
    Coefficient c = lt.coeff * inv;
    q = q + Polynomial::from_terms(f.ring(), {{m, c}});
    r = r.minus_multiple(c, m, g);
  }
  return q;
}

}  // namespace gcmwb
