#pragma once

#include <vector>

#include "gcmwb/polynomial.hpp"

namespace gcmwb {

/// Reduced Gröbner basis with respect to the order of `ring()`.
/// Generators are monic, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens, bool reduced);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return gens_.empty(); }

  std::vector<Monomial> leading_monomials() const;

  /// Fully reduced remainder of f; zero iff f lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Index of a generator whose leading monomial divides m, if any.
  const Polynomial* reducer_for(const Monomial& m) const noexcept;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::vector<std::uint32_t> masks_;
  bool reduced_;
};

/// Buchberger's algorithm (normal selection strategy, Gebauer–Möller pair
/// criteria) in the order of the generators' ring; returns the reduced basis.
GroebnerBasis groebner(const RingPtr& ring, const std::vector<Polynomial>& gens);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Remainder of f after full reduction by an arbitrary (not necessarily
/// Gröbner) list of monic-or-not divisors.
Polynomial reduce_by(const Polynomial& f, const std::vector<const Polynomial*>& divisors);

}  // namespace gcmwb
