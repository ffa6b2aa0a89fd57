#include "gcmwb/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcmwb {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(r);
}

namespace {

void add_into(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool is_pure_power(const Monomial& m) {
  int support = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i) support += m[i] != 0;
  return support <= 1;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};

  std::vector<std::size_t> mixed;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!is_pure_power(gens[k])) mixed.push_back(k);

  if (mixed.empty()) {
    // Pure powers of distinct variables: a complete intersection.
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = multiply(r, f);
    }
    return r;
  }

  // Bigatti-style pivot: the variable occurring most often in mixed
  // generators, at the median of its exponents there.
  std::vector<std::size_t> count(nvars, 0);
  for (auto k : mixed)
    for (std::size_t i = 0; i < nvars; ++i)
      if (gens[k][i]) ++count[i];
  const std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<unsigned> exps;
  for (auto k : mixed)
    if (gens[k][var]) exps.push_back(gens[k][var]);
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  const unsigned e = exps[exps.size() / 2];
  const Monomial pivot = Monomial::variable(nvars, var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, g[var] > e ? g[var] - e : 0);
    colon.push_back(q);
  }

  IntPoly r = numerator_rec(std::move(with_pivot), nvars);
  add_into(r, numerator_rec(std::move(colon), nvars), e);
  trim(r);
  return r;
}

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  IntPoly r = numerator_rec(gens, nvars);
  trim(r);
  return r;
}

std::pair<IntPoly, std::size_t> divide_by_one_minus_t(IntPoly p, std::size_t max_times) {
  std::size_t times = 0;
  while (times < max_times) {
    trim(p);
    if (p.size() == 1 && p[0] == 0) break;
    std::int64_t sum = 0;
    for (auto c : p) sum += c;
    if (sum != 0) break;
    // p(t) = (1 - t) q(t): q_i = sum_{j<=i} p_j.
    IntPoly q(p.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      run += p[i];
      q[i] = run;
    }
    if (q.empty()) q = {0};
    p = std::move(q);
    ++times;
  }
  trim(p);
  return {p, times};
}

std::int64_t hilbert_function_value(const IntPoly& numerator, std::size_t nvars, std::int64_t n) {
  std::int64_t v = 0;
  const auto s = static_cast<std::int64_t>(nvars);
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const std::int64_t m = n - static_cast<std::int64_t>(k);
    if (m < 0) break;
    v += numerator[k] * binomial(m + s - 1, s - 1);
  }
  return v;
}

std::int64_t cumulative_hilbert_value(const IntPoly& numerator, std::size_t nvars, std::int64_t t) {
  std::int64_t v = 0;
  const auto s = static_cast<std::int64_t>(nvars);
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const std::int64_t m = t - static_cast<std::int64_t>(k);
    if (m < 0) break;
    v += numerator[k] * binomial(m + s, s);
  }
  return v;
}

std::size_t dimension_from_numerator(const IntPoly& numerator, std::size_t nvars) {
  if (numerator.size() == 1 && numerator[0] == 0) return 0;
  auto [q, times] = divide_by_one_minus_t(numerator, nvars);
  return nvars - times;
}

}  // namespace gcmwb
