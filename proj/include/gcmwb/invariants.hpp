#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcmwb/bounds.hpp"
#include "gcmwb/local_ring.hpp"

namespace gcmwb {

/// Hilbert–Samuel data ℓ(A/Q^{n+1}) with the fitted multiplicity.
struct MultiplicityFit {
  std::uint64_t e = 0;
  std::vector<std::uint64_t> samples;  // samples[n] = ℓ(A/Q^{n+1})
  std::size_t window_start = 0;        // first n of the constant d-th difference window
  bool certified = false;              // window lies past the theorem-backed horizon
};

enum class IAStatus { Stabilized, Divergent, CapReached };
std::string to_string(IAStatus s);
IAStatus ia_status_from_string(const std::string& s);

struct IAEstimate {
  std::int64_t value = 0;
  IAStatus status = IAStatus::CapReached;
  std::vector<std::int64_t> trace;  // trace[n-1] = I((x_1^n..x_d^n), A)

  bool operator==(const IAEstimate&) const = default;
};

struct InvariantRecord {
  std::string ring;
  std::string q;
  std::uint64_t colength = 0;
  std::uint64_t multiplicity = 0;
  std::int64_t iq = 0;
  std::size_t fit_window_start = 0;
  bool fit_certified = false;
};

/// Joint computation of e(Q,A) and the I(A) trace. The d-th difference window
/// is moved forward until the trace is nonnegative and non-decreasing and, when
/// the trace stabilizes, until the window lies past the regularity bound.
struct HilbertSamuelAnalysis {
  MultiplicityFit fit;
  IAEstimate ia;
};
HilbertSamuelAnalysis analyze_hilbert_samuel(const LocalRing& a, const ParameterSystem& q, unsigned n_max);

std::uint64_t multiplicity(const LocalRing& a, const ParameterSystem& q);
InvariantRecord invariant_iq(const LocalRing& a, const ParameterSystem& q);
IAEstimate invariant_ia(const LocalRing& a, const ParameterSystem& q, unsigned n_max);

/// e(x, A) = ℓ(A/xA) − ℓ(0 :_A x) for a parameter x of a one-dimensional ring.
std::int64_t euler_multiplicity_dim1(const LocalRing& a, const Polynomial& x);

/// ℓ(H^0_m(A)) = ℓ((I : m^∞)/I).
std::uint64_t zeroth_local_cohomology_length(const LocalRing& a);

/// A/J^power for a partial system J (0 < i < d); dimension checked to be d − i.
LocalRing quotient_ring_by_subsystem(const LocalRing& a, const ParameterSystem& j, unsigned power);

/// I(A/J^{n+1}) ≤ binom(n+i−1, i−1)·I(A), with J the first i elements of q.
BoundEntry check_theorem_invariant_bound(const LocalRing& a, const ParameterSystem& q, std::size_t i, unsigned n,
                                         std::int64_t ia);

/// ℓ(J^{n+1}:x_{i+1}^m / J^{n+1}) ≤ binom(n+i−1,i−1)·I(A) (J = first i elements)
/// and, for d >= 2, ℓ(Q^{n+m}:x_d^m / Q^n) ≤ binom(n+d−2,d−2)·I(A).
std::vector<BoundEntry> check_colon_bounds(const LocalRing& a, const ParameterSystem& q, std::size_t i, unsigned n,
                                           unsigned m, std::int64_t ia);

/// ℓ(A/Q^{n+1}) ≤ binom(n+d,d)·e + binom(n+d−1,d−1)·I(A).
BoundEntry check_hilbert_bound(const LocalRing& a, const ParameterSystem& q, unsigned n, std::uint64_t e,
                               std::int64_t ia);

struct ColonTestItem {
  std::string sop;
  std::optional<unsigned> least_n;  // nullopt: none within the cap

  bool operator==(const ColonTestItem&) const = default;
};

struct GcmColonReport {
  std::vector<ColonTestItem> items;
  std::optional<unsigned> max_n;  // over the sample; nullopt if some item had none
  bool uniform_within_cap = false;

  bool operator==(const GcmColonReport&) const = default;
};

/// Least n with m^n·((x_1..x_{d−1}) : x_d) ⊆ (x_1..x_{d−1}) in A, per sop.
std::optional<unsigned> least_colon_exponent(const LocalRing& a, const ParameterSystem& sop, unsigned n_cap);
GcmColonReport gcm_colon_test(const LocalRing& a, const std::vector<ParameterSystem>& sops, unsigned n_cap);

}  // namespace gcmwb
