#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcmwb/coefficient.hpp"
#include "gcmwb/monomial.hpp"

namespace gcmwb {

/// k[x_1..x_s] with a fixed monomial order. Immutable and shared.
class PolyRing {
 public:
  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> variables,
                                              MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same field and variables, different order.
  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

 private:
  PolyRing(Field f, std::vector<std::string> v, MonomialOrder o)
      : field_(f), vars_(std::move(v)), order_(std::move(o)) {}

  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coefficient coeff;
};

/// Sparse polynomial: terms sorted strictly decreasing in the ring's order,
/// no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Wraps terms that are already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms));
  }
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coefficient& leading_coeff() const { return leading_term().coeff; }

  /// Largest total degree of a term (0 for the zero polynomial).
  std::uint32_t total_degree() const noexcept;
  /// Smallest total degree of a term.
  std::uint32_t order_at_origin() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_term(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(unsigned n) const;
  Polynomial monic() const;

  /// this - c*m*g in one merge pass.
  Polynomial minus_multiple(const Coefficient& c, const Monomial& m, const Polynomial& g) const;

  /// Re-expresses in `target`; variable i of this ring becomes variable
  /// var_map[i] of the target.
  Polynomial map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// True if some term involves variable `index`.
  bool involves(std::size_t index) const noexcept;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  void check_same(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Coefficient constant_term(const Polynomial& f);

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

/// Exact division f / g; throws InvalidArgument if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace gcmwb
