#pragma once

#include <vector>

#include "gcmwb/coefficient.hpp"

namespace gcmwb::linalg {

using Row = std::vector<Coefficient>;

/// Basis of the right null space {c : A c = 0} of the matrix with the given rows.
std::vector<Row> nullspace(const Field& field, std::vector<Row> rows, std::size_t ncols);

/// Rank of the matrix with the given rows.
std::size_t rank(const Field& field, std::vector<Row> rows, std::size_t ncols);

}  // namespace gcmwb::linalg
