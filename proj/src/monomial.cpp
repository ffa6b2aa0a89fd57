#include "gcmwb/monomial.hpp"

#include <limits>

#include "gcmwb/error.hpp"

namespace gcmwb {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<std::uint16_t>::max();

void check_nvars(std::size_t n) {
  if (n > kMaxVariables)
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw InvalidArgument("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned(exp_[i]) + o.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (o.exp_[i] > exp_[i]) throw InvalidArgument("monomial division is not exact");
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  }
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] && o.exp_[i]) return false;
  return true;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i]) m |= 1u << i;
  return m;
}

bool Monomial::operator==(const Monomial& o) const noexcept {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && exp_ == o.exp_;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exp_[i]) * 1099511628211ull;
  return h;
}

MonomialOrder MonomialOrder::permuted(std::vector<std::size_t> perm) const {
  return MonomialOrder(kind_, block_, std::move(perm));
}

bool MonomialOrder::refines_degree() const noexcept {
  return kind_ == OrderKind::DegRevLex || (kind_ == OrderKind::Block && block_ == 0);
}

namespace {

// Degrevlex restricted to positions [lo, hi) of the (permuted) variable list.
template <class At>
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi, At at) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[at(i)];
    db += b[at(i)];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    unsigned ea = a[at(i)], eb = b[at(i)];
    if (ea != eb) return eb <=> ea;  // smaller exponent in the last variable wins
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.num_vars();
  auto at = [this](std::size_t i) { return this->at(i); };
  switch (kind_) {
    case OrderKind::DegRevLex:
      if (perm_.empty()) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = n; i-- > 0;)
          if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
      }
      return degrevlex_range(a, b, 0, n, at);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = a[at(i)], eb = b[at(i)];
        if (ea != eb) return ea <=> eb;
      }
      return std::strong_ordering::equal;
    case OrderKind::Block: {
      const std::size_t front = std::min(block_, n);
      auto c = degrevlex_range(a, b, 0, front, at);
      if (c != std::strong_ordering::equal) return c;
      return degrevlex_range(a, b, front, n, at);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering compare_monomials(const Monomial& m1, const Monomial& m2,
                                       const MonomialOrder& ord) {
  if (m1.num_vars() != m2.num_vars()) throw RingMismatch("monomials with different variable counts");
  return ord.compare(m1, m2);
}

}  // namespace gcmwb
