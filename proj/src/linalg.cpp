#include "linalg.hpp"

#include <cstdint>

namespace gcmwb::linalg {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::vector<std::uint32_t>>& a, std::size_t ncols,
                                  std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    const std::uint64_t inv = inv_mod(a[r][c], p);
    for (std::size_t k = c; k < ncols; ++k) a[r][k] = static_cast<std::uint32_t>(a[r][k] * inv % p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = p - a[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (a[r][k]) a[i][k] = static_cast<std::uint32_t>((a[i][k] + f * a[r][k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_generic(std::vector<Row>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][c].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[r], a[sel]);
    const Coefficient inv = a[r][c].inverse();
    for (std::size_t k = c; k < ncols; ++k) a[r][k] = a[r][k] * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Coefficient f = a[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!a[r][k].is_zero()) a[i][k] = a[i][k] - f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Null space from an RREF: one vector per free column.
template <class Get, class Make>
std::vector<Row> kernel_from_rref(std::size_t ncols, const std::vector<std::size_t>& pivots, Get get,
                                  Make make) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Row v(ncols, make(0));
    v[f] = make(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = get(r, f, true);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Row> nullspace(const Field& field, std::vector<Row> rows, std::size_t ncols) {
  auto make = [&](long v) { return Coefficient(field, v); };
  if (!field.is_rational()) {
    const std::uint32_t p = field.characteristic();
    std::vector<std::vector<std::uint32_t>> a(rows.size(), std::vector<std::uint32_t>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = rows[i][j].residue();
    auto pivots = rref_mod(a, ncols, p);
    return kernel_from_rref(ncols, pivots,
                            [&](std::size_t r, std::size_t f, bool) {
                              return Coefficient(field, a[r][f] == 0 ? 0L : long(p - a[r][f]));
                            },
                            make);
  }
  auto pivots = rref_generic(rows, ncols);
  return kernel_from_rref(ncols, pivots, [&](std::size_t r, std::size_t f, bool) { return -rows[r][f]; },
                          make);
}

std::size_t rank(const Field& field, std::vector<Row> rows, std::size_t ncols) {
  if (!field.is_rational()) {
    const std::uint32_t p = field.characteristic();
    std::vector<std::vector<std::uint32_t>> a(rows.size(), std::vector<std::uint32_t>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = rows[i][j].residue();
    return rref_mod(a, ncols, p).size();
  }
  return rref_generic(rows, ncols).size();
}

}  // namespace gcmwb::linalg
