#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gcmwb {

inline constexpr std::size_t kMaxVariables = 15;

/// Exponent vector with cached total degree. Arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t num_vars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  /// Overflow-checked product.
  Monomial operator*(const Monomial& o) const;
  /// Quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const;

  bool divides(const Monomial& o) const noexcept;
  Monomial lcm(const Monomial& o) const;
  /// gcd(*this, o) = 1, i.e. disjoint supports.
  bool coprime(const Monomial& o) const noexcept;
  /// Bit i set iff variable i occurs; cheap divisibility pre-filter.
  std::uint32_t support_mask() const noexcept;

  bool operator==(const Monomial& o) const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { DegRevLex, Lex, Block };

/// A monomial order. Block orders compare the first `block_size` variables
/// (after the optional permutation) by degrevlex, breaking ties by degrevlex
/// on the remaining ones; they are elimination orders for that front block.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, 0, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0, {}); }
  static MonomialOrder block(std::size_t front) { return MonomialOrder(OrderKind::Block, front, {}); }

  /// Same order applied to variables visited in `perm` order (perm[i] is the
  /// variable that plays the role of position i).
  MonomialOrder permuted(std::vector<std::size_t> perm) const;

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  /// Whether the order refines total degree (needed for affine Hilbert counts).
  bool refines_degree() const noexcept;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  bool operator==(const MonomialOrder&) const = default;
  std::string to_string() const;

 private:
  MonomialOrder(OrderKind k, std::size_t block, std::vector<std::size_t> perm)
      : kind_(k), block_(block), perm_(std::move(perm)) {}

  std::size_t at(std::size_t i) const noexcept { return perm_.empty() ? i : perm_[i]; }

  OrderKind kind_;
  std::size_t block_;
  std::vector<std::size_t> perm_;
};

std::strong_ordering compare_monomials(const Monomial& m1, const Monomial& m2,
                                       const MonomialOrder& ord);

}  // namespace gcmwb
