#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcmwb/bounds.hpp"
#include "gcmwb/local_ring.hpp"

namespace gcmwb {

/// h(n) = ℓ(Q^n/Q^{n+1}).
std::uint64_t hilbert_g(const LocalRing& a, const ParameterSystem& q, unsigned n);

/// Hilbert function of G_Q(A) up to a horizon, its Hilbert polynomial and p(Q).
struct GradedView {
  std::string ring;
  std::string q;
  std::vector<std::uint64_t> hilbert;  // h(0..N)
  /// P(n) = Σ_k coeffs[k]·binom(n, k), the forward differences of P at 0.
  std::vector<std::int64_t> coeffs;
  std::uint64_t postulation = 0;  // p(Q)
  std::int64_t horizon = 0;

  std::int64_t polynomial(std::int64_t n) const;
};

/// Regularity horizon B: the configured override, else the regularity bound
/// from a certified I(A). Throws InvalidArgument when neither is available.
std::int64_t graded_horizon(const LocalRing& a, std::optional<std::int64_t> certified_ia);

/// Fits P from d points starting at B + 1 and verifies w more; p(Q) is the least
/// n0 >= 0 with h(n) = P(n) for every computed n >= n0.
GradedView postulation(const LocalRing& a, const ParameterSystem& q, std::int64_t horizon);

/// ℓ of the degree-n part of {f ∈ Q^n : Q^m f ⊆ D_{n+m}}/D_n, where
/// D_n = (y)Q^{n-1} + Q^{n+1} and y = `modded`. For m large this is
/// H^0_{G_+}(G/(y*)G)_n.
std::uint64_t plus_torsion_length(const LocalRing& a, const ParameterSystem& q, const std::vector<Polynomial>& modded,
                                  unsigned n, unsigned m);
/// Same with m = torsion_exponent(B, n) for the certified horizon B (the
/// override, else the bound from I(A) sampled on the power family of q).
/// Consecutive equal values in m do not certify: the chain can stay at 0 for
/// several steps before the torsion of degree n appears.
std::uint64_t plus_torsion_length(const LocalRing& a, const ParameterSystem& q, const std::vector<Polynomial>& modded,
                                  unsigned n);
/// Torsion exponent certified by the horizon: torsion lives in degrees <= B,
/// so Q^m f lands in zero torsion once n + m > B.
unsigned torsion_exponent(std::int64_t horizon, unsigned n);

/// ℓ((0 :_M y*)_n) for M = G/(modded*)G.
std::uint64_t initial_form_annihilator_length(const LocalRing& a, const ParameterSystem& q,
                                              const std::vector<Polynomial>& modded, const Polynomial& y, unsigned n);

struct FilterRegularElement {
  Polynomial element;
  std::vector<std::string> coefficients;  // of the generators of Q
  unsigned window_begin = 0, window_end = 0;  // verified degrees, inclusive
  unsigned attempts = 0;
};

/// Random combination of the generators of Q whose initial form annihilates
/// nothing in M = G/(modded*)G in degrees (B, B + slack].
FilterRegularElement filter_regular_initial_form(const LocalRing& a, const ParameterSystem& q,
                                                 const std::vector<Polynomial>& modded, std::int64_t horizon,
                                                 std::uint64_t seed);

struct RegularityCertificate {
  std::int64_t reg = 0;
  std::vector<FilterRegularElement> sequence;
  std::vector<std::optional<std::int64_t>> stage_ends;      // end of torsion per stage 0..d
  std::vector<std::vector<std::uint64_t>> stage_torsion;    // torsion lengths for n = 0..B+slack
  std::int64_t horizon = 0;
};

/// reg(G_Q(A)) = max over stages i = 0..d of end(H^0_{G_+}(G/(z_1..z_i)G)),
/// floored at 0, for a filter-regular sequence z_i.
RegularityCertificate regularity_g(const LocalRing& a, const ParameterSystem& q, std::int64_t horizon);
RegularityCertificate regularity_g(const LocalRing& a, const ParameterSystem& q,
                                   std::optional<std::int64_t> certified_ia);

/// Lemma2.4 entries for each n (and Thm2.2 entries when H^0_m(A) = 0), using the
/// first element of the certificate's filter-regular sequence as x.
std::vector<BoundEntry> mumford_gap_check(const LocalRing& a, const ParameterSystem& q,
                                          const RegularityCertificate& cert, const GradedView& view,
                                          const std::vector<unsigned>& ns, std::int64_t ia);

}  // namespace gcmwb
