#pragma once

#include <random>
#include <string>
#include <vector>

#include "gcmwb/local_ring.hpp"
#include "gcmwb/parse.hpp"

namespace gcmwb::test {

inline RingPtr ring(std::vector<std::string> vars, std::uint32_t p = 101,
                    MonomialOrder ord = MonomialOrder::degrevlex()) {
  return PolyRing::make(p == 0 ? Field::rationals() : Field::prime(p), std::move(vars), std::move(ord));
}

inline Polynomial poly(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline std::vector<Polynomial> polys(const RingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(poly(r, s));
  return out;
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& ss) { return Ideal(r, polys(r, ss)); }

inline LocalRing local(std::string name, std::vector<std::string> vars, const std::vector<std::string>& rels,
                       const EngineConfig& cfg = {}) {
  return make_local_ring(make_presentation(std::move(name), 101, std::move(vars), rels), cfg);
}

inline ParameterSystem sop(const LocalRing& a, const std::vector<std::string>& xs) {
  return validate_parameter_system(a, polys(a.ring(), xs));
}

/// E_r = k[x,y]/(x^2, x*y^r).
inline LocalRing example_ring(unsigned r) {
  return local("E" + std::to_string(r), {"x", "y"}, {"x^2", "x*y^" + std::to_string(r)});
}

inline LocalRing two_planes() { return local("TwoPlanes", {"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}); }

inline LocalRing line_and_plane() { return local("C", {"x", "y", "z"}, {"x*y", "x*z"}); }

/// Random polynomial with at most `terms` terms of degree <= deg, zero constant term.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, unsigned deg, unsigned terms) {
  const std::size_t s = r->num_vars();
  std::vector<Term> ts;
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(s);
    const unsigned d = 1 + static_cast<unsigned>(rng() % deg);
    for (unsigned j = 0; j < d; ++j) {
      const std::size_t v = rng() % s;
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, Coefficient(r->field(), static_cast<long>(rng() % 201) - 100)});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace gcmwb::test
