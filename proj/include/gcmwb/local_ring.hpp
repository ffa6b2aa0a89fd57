#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gcmwb/config.hpp"
#include "gcmwb/ideal.hpp"

namespace gcmwb {

/// k[x_1..x_s]/I, to be localized at the origin.
struct RingPresentation {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> relations;
};

/// Builds a presentation from strings; variables and generators are parsed
/// with the polynomial syntax. Characteristic 0 means the rationals.
RingPresentation make_presentation(std::string name, std::uint32_t characteristic,
                                   std::vector<std::string> variables,
                                   const std::vector<std::string>& relations);

/// A validated (sub)system of parameters.
struct ParameterSystem {
  std::vector<Polynomial> elements;
  bool full = false;

  std::size_t size() const noexcept { return elements.size(); }
  /// First k elements (unvalidated; prefixes of a sop are subsystems).
  ParameterSystem prefix(std::size_t k) const;
  std::string to_string() const;
};

/// Length of a module, or nullopt for infinite length.
using Length = std::optional<std::uint64_t>;

class LocalRing {
 public:
  const RingPresentation& presentation() const noexcept { return state_->pres; }
  const RingPtr& ring() const noexcept { return state_->pres.ring; }
  const std::string& name() const noexcept { return state_->pres.name; }
  /// The defining ideal I.
  const Ideal& defining_ideal() const noexcept { return state_->defining; }
  std::size_t dimension() const noexcept { return state_->dim; }
  const EngineConfig& config() const noexcept { return state_->config; }
  std::size_t num_vars() const noexcept { return ring()->num_vars(); }

  Ideal ideal(std::vector<Polynomial> gens) const { return Ideal(ring(), std::move(gens)); }
  Ideal maximal_ideal() const { return Ideal::maximal_power(ring(), 1); }
  /// Generators reduced modulo I (zeros and duplicates dropped).
  Ideal reduce(const Ideal& j) const;
  /// J^n with generators reduced modulo I; memoized.
  Ideal power(const Ideal& j, unsigned n) const;

  /// ℓ(A/JA) localized at m.
  Length colength(const Ideal& j) const;
  /// ℓ((U/V)_m) for V ⊆ U modulo I; throws if the local length is infinite.
  std::uint64_t finite_subquotient_length(const Ideal& u, const Ideal& v) const;
  /// f ∈ (I + K)_m, i.e. ((I + K) : f) is not inside m.
  bool locally_contains(const Ideal& k, const Polynomial& f) const;
  bool locally_contains(const Ideal& k, const Ideal& sub) const;

  /// A/(elements) as a new local ring; throws InvalidParameterSystem when the
  /// dimension is not `expected_dim` (if given).
  LocalRing quotient(const std::vector<Polynomial>& elements, std::optional<std::size_t> expected_dim,
                     std::string name = "") const;

  LocalRing with_config(const EngineConfig& cfg) const;

 private:
  friend LocalRing make_local_ring(const RingPresentation&, const EngineConfig&);
  struct State {
    RingPresentation pres;
    Ideal defining;
    std::size_t dim = 0;
    EngineConfig config;
    mutable std::mutex mu;
    mutable std::map<std::string, Length> colengths;
    mutable std::map<std::string, Ideal> powers;
    explicit State(RingPresentation p, EngineConfig c)
        : pres(std::move(p)), defining(pres.ring, pres.relations), config(c) {}
  };
  explicit LocalRing(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

/// Validates the presentation (generators inside m) and computes d.
LocalRing make_local_ring(const RingPresentation& p, const EngineConfig& cfg = {});

/// d = dim A_m: exact from the Hilbert series when I is homogeneous, otherwise
/// the degree of n ↦ ℓ(A/m^n) once its finite differences stabilize.
std::size_t local_dimension(const Ideal& defining, const EngineConfig& cfg);

Length colength(const LocalRing& a, const Ideal& j);
std::uint64_t finite_subquotient_length(const LocalRing& a, const Ideal& u, const Ideal& v);

/// Checks that `xs` is a system (|xs| = d) or subsystem (|xs| < d) of parameters.
ParameterSystem validate_parameter_system(const LocalRing& a, const std::vector<Polynomial>& xs);

/// True when some weight vector, positive on the variables flagged in
/// `positive` and nonnegative elsewhere, makes every generator weighted
/// homogeneous. Then every associated prime lies inside the ideal of the
/// flagged variables, so localizing there loses nothing.
bool positively_graded(const std::vector<Polynomial>& gens, const std::vector<bool>& positive);

/// K : m^∞ computed as the intersection of K : x_i^∞.
Ideal saturate_at_origin(const Ideal& k);
/// K : f^∞ = (K + (1 − t f)) ∩ k[x].
Ideal saturate_by_element(const Ideal& k, const Polynomial& f);

}  // namespace gcmwb
