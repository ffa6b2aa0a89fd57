#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gcmwb/groebner.hpp"
#include "gcmwb/hilbert.hpp"
#include "gcmwb/polynomial.hpp"

namespace gcmwb {

/// An ideal of the ambient polynomial ring, given by generators. Gröbner bases
/// are computed lazily per monomial order and cached; copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// m^n for m = (x_1..x_s); m^0 is the unit ideal.
  static Ideal maximal_power(RingPtr ring, unsigned n);
  /// (x_1^n, ..., x_s^n).
  static Ideal pure_powers(RingPtr ring, unsigned n);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced basis in the ring's own order.
  const GroebnerBasis& basis() const;
  /// Reduced basis for another order; its polynomials live in
  /// ring()->with_order(ord).
  const GroebnerBasis& basis(const MonomialOrder& ord) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& o) const;
  /// Mutual containment of generators; never compares basis lists.
  bool equals(const Ideal& o) const { return contains(o) && o.contains(*this); }
  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const;

  /// Ideal generated by the reduced basis (same ideal, tidier generators).
  Ideal minimalized() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

enum class CombineOp { Sum, Product, Power };

/// Generator-level sum, product, or power. For Power the second operand is
/// ignored and `n` is the exponent; power 0 is the unit ideal.
Ideal ideal_combine(const Ideal& u, const Ideal& v, CombineOp op, unsigned n = 0);
Ideal sum(const Ideal& u, const Ideal& v);
Ideal product(const Ideal& u, const Ideal& v);
Ideal power(const Ideal& u, unsigned n);

/// U ∩ V via t·U + (1 − t)·V and elimination of t.
Ideal intersect(const Ideal& u, const Ideal& v);

/// U : f = {g : g·f ∈ U}. Zero-dimensional U uses the kernel of
/// multiplication by f on standard monomials; otherwise (U ∩ (f)) / f.
Ideal ideal_quotient(const Ideal& u, const Polynomial& f);
/// Same result, always through intersection and exact division.
Ideal ideal_quotient_by_elimination(const Ideal& u, const Polynomial& f);
/// U : V = ∩ U : v over generators v of V.
Ideal ideal_quotient(const Ideal& u, const Ideal& v);

struct Saturation {
  Ideal ideal;
  unsigned exponent;
};

/// U : V^∞ together with the least e with U : V^e = U : V^{e+1}. Throws
/// CapExceeded after `cap` quotient steps without stabilization.
Saturation saturate(const Ideal& u, const Ideal& v, unsigned cap = 64);

/// U ∩ k[remaining variables], via a block order with `drop` in front.
/// Result generators stay in U's ring.
Ideal eliminate(const Ideal& u, const std::vector<std::size_t>& drop);

/// dim_k k[x]/U, or nullopt when infinite.
std::optional<std::uint64_t> kdim_quotient(const Ideal& u);

/// Numerator of the Hilbert series of k[x]/LT(U) (degrevlex leading terms).
IntPoly hilbert_numerator(const Ideal& u);

/// Krull dimension of k[x]/U (global, not local). The unit ideal gives 0.
std::size_t krull_dimension(const Ideal& u);

/// dim_k of k[x]/U truncated at total degree <= t, counted as standard
/// monomials of degree <= t. Throws InvalidArgument unless `ord` refines degree.
std::uint64_t affine_hilbert(const Ideal& u, std::uint64_t t,
                             const MonomialOrder& ord = MonomialOrder::degrevlex());

/// U ⊆ m = (x_1..x_s).
bool contained_in_max_ideal(const Ideal& u);

/// Monomials outside LT(U) in the ring's order; U must be zero-dimensional.
std::vector<Monomial> standard_monomials(const Ideal& u);

/// Ideal of k[x] generated by generators of `u` re-expressed in `target`.
Ideal change_ring(const Ideal& u, const RingPtr& target, const std::vector<std::size_t>& var_map);

}  // namespace gcmwb
