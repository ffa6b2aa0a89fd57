#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcmwb/monomial.hpp"

namespace gcmwb {

/// Integer polynomial in one variable t, coefficients by ascending degree.
using IntPoly = std::vector<std::int64_t>;

/// Numerator N(t) of the Hilbert series of k[x_1..x_s]/M for a monomial ideal
/// M, i.e. HS(t) = N(t) / (1 - t)^s. Standard grading.
IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// Divides by (1 - t) as often as possible, up to `max_times`; returns the
/// quotient and how many divisions were exact.
std::pair<IntPoly, std::size_t> divide_by_one_minus_t(IntPoly p, std::size_t max_times);

/// dim_k of degree-n part of k[x]/M given N(t) and s.
std::int64_t hilbert_function_value(const IntPoly& numerator, std::size_t nvars, std::int64_t n);

/// dim_k of the part of degree <= t.
std::int64_t cumulative_hilbert_value(const IntPoly& numerator, std::size_t nvars, std::int64_t t);

/// Krull dimension of k[x]/M: order of the pole of N(t)/(1-t)^s at t = 1.
std::size_t dimension_from_numerator(const IntPoly& numerator, std::size_t nvars);

/// Binomial coefficient C(n, k) with C(n, k) = 0 for n < k or k < 0; n >= 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace gcmwb
