#include "gcmwb/coefficient.hpp"

#include "gcmwb/error.hpp"

namespace gcmwb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidArgument("characteristic must be prime (got " + std::to_string(p) + ")");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "F" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

[[noreturn]] void mismatch() { throw RingMismatch("coefficients from different fields"); }

}  // namespace

Coefficient::Coefficient(const Field& field, long value) {
  if (field.is_rational())
    v_ = mpq_class(value);
  else
    v_ = Modular{reduce(value, field.characteristic()), field.characteristic()};
}

Coefficient::Coefficient(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    v_ = value;
    return;
  }
  const std::uint32_t p = field.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw InvalidArgument("denominator divisible by the characteristic");
  std::uint32_t n = reduce(num.get_si(), p);
  std::uint32_t d = reduce(den.get_si(), p);
  v_ = Modular{static_cast<std::uint32_t>(std::uint64_t(n) * pow_mod(d, p - 2, p) % p), p};
}

bool Coefficient::is_zero() const {
  if (auto m = std::get_if<Modular>(&v_)) return m->value == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Coefficient::is_one() const {
  if (auto m = std::get_if<Modular>(&v_)) return m->value == 1;
  return std::get<mpq_class>(v_) == 1;
}


Field Coefficient::field() const {
  if (auto m = std::get_if<Modular>(&v_)) return Field(m->p);
  return Field::rationals();
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  if (auto a = std::get_if<Modular>(&v_)) {
    auto b = std::get_if<Modular>(&o.v_);
    if (!b || b->p != a->p) mismatch();
    std::uint32_t s = a->value + b->value;
    if (s >= a->p) s -= a->p;
    return Coefficient(Modular{s, a->p});
  }
  auto b = std::get_if<mpq_class>(&o.v_);
  if (!b) mismatch();
  return Coefficient(mpq_class(std::get<mpq_class>(v_) + *b));
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  if (auto a = std::get_if<Modular>(&v_)) {
    auto b = std::get_if<Modular>(&o.v_);
    if (!b || b->p != a->p) mismatch();
    std::uint32_t s = a->value >= b->value ? a->value - b->value : a->value + a->p - b->value;
    return Coefficient(Modular{s, a->p});
  }
  auto b = std::get_if<mpq_class>(&o.v_);
  if (!b) mismatch();
  return Coefficient(mpq_class(std::get<mpq_class>(v_) - *b));
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  if (auto a = std::get_if<Modular>(&v_)) {
    auto b = std::get_if<Modular>(&o.v_);
    if (!b || b->p != a->p) mismatch();
    return Coefficient(
        Modular{static_cast<std::uint32_t>(std::uint64_t(a->value) * b->value % a->p), a->p});
  }
  auto b = std::get_if<mpq_class>(&o.v_);
  if (!b) mismatch();
  return Coefficient(mpq_class(std::get<mpq_class>(v_) * *b));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  if (auto a = std::get_if<Modular>(&v_))
    return Coefficient(Modular{pow_mod(a->value, a->p - 2, a->p), a->p});
  return Coefficient(mpq_class(1 / std::get<mpq_class>(v_)));
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::operator-() const {
  if (auto a = std::get_if<Modular>(&v_))
    return Coefficient(Modular{a->value == 0 ? 0 : a->p - a->value, a->p});
  return Coefficient(mpq_class(-std::get<mpq_class>(v_)));
}

bool Coefficient::operator==(const Coefficient& o) const { return v_ == o.v_; }

std::uint32_t Coefficient::residue() const {
  if (auto a = std::get_if<Modular>(&v_)) return a->value;
  throw InvalidArgument("residue() on a rational coefficient");
}

const mpq_class& Coefficient::rational() const {
  if (auto q = std::get_if<mpq_class>(&v_)) return *q;
  throw InvalidArgument("rational() on a modular coefficient");
}

bool Coefficient::prints_negative() const {
  if (auto a = std::get_if<Modular>(&v_)) return a->value > a->p / 2;
  return std::get<mpq_class>(v_) < 0;
}

std::string Coefficient::to_string() const {
  if (auto a = std::get_if<Modular>(&v_)) {
    if (a->value > a->p / 2) return "-" + std::to_string(a->p - a->value);
    return std::to_string(a->value);
  }
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace gcmwb
