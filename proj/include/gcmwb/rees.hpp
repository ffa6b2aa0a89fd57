#pragma once

#include <string>
#include <vector>

#include "gcmwb/local_ring.hpp"

namespace gcmwb {

/// R_Q(A) = A[T_1..T_d]/ℑ with ℑ the forms vanishing at the generators of Q.
struct ReesPresentation {
  RingPtr ring;                          // k[x_1..x_s, T_1..T_d]
  std::vector<std::string> variables;
  std::vector<Polynomial> ideal;         // ℑ (including I), T-homogeneous
  std::vector<Polynomial> minimal;       // a local minimal generating set, by T-degree
  std::vector<unsigned> minimal_degrees;
  unsigned reltype = 1;
};

/// T-degree of a T-homogeneous element of k[x, T] (first `s` variables are x).
unsigned t_degree(const Polynomial& f, std::size_t s);

/// ℑ by eliminating t from I + (T_j − t·x_j); minimal generators extracted in
/// increasing T-degree with local membership over k[x]_m.
ReesPresentation rees_presentation(const LocalRing& a, const ParameterSystem& q);

/// Relation type of (x) for a parameter x of a one-dimensional ring:
/// max{1, largest n with 0 :_A x^n ≠ 0 :_A x^{n−1}}.
unsigned principal_reltype(const LocalRing& a, const Polynomial& x);

}  // namespace gcmwb
