#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gcmwb {

/// The coefficient field: F_p for a prime p, or the rationals (characteristic 0).
class Field {
 public:
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  friend bool operator==(const Field&, const Field&) = default;

  std::string to_string() const;

 private:
  friend class Coefficient;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Residues are kept canonical in [0, p).
class Coefficient {
 public:
  /// Image of an integer in the field.
  Coefficient(const Field& field, long value);
  Coefficient(const Field& field, const mpq_class& value);

  static Coefficient zero(const Field& f) { return Coefficient(f, 0L); }
  static Coefficient one(const Field& f) { return Coefficient(f, 1L); }

  bool is_zero() const;
  bool is_one() const;
  Field field() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  bool operator==(const Coefficient& o) const;

  /// Residue in [0, p); only valid for prime fields.
  std::uint32_t residue() const;
  /// Exact rational value; only valid over the rationals.
  const mpq_class& rational() const;

  /// Symmetric representative for printing: residues above p/2 print negative.
  std::string to_string() const;
  /// True when to_string() would start with a minus sign.
  bool prints_negative() const;

 private:
  struct Modular {
    std::uint32_t value;
    std::uint32_t p;
    bool operator==(const Modular&) const = default;
  };
  explicit Coefficient(Modular m) : v_(m) {}
  explicit Coefficient(mpq_class q) : v_(std::move(q)) {}

  std::variant<Modular, mpq_class> v_;
};

}  // namespace gcmwb
