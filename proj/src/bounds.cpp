#include "gcmwb/bounds.hpp"

#include "gcmwb/error.hpp"

namespace gcmwb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIP";
    case Verdict::Error:
      return "ERROR";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  if (s == "SKIP") return Verdict::Skipped;
  if (s == "ERROR") return Verdict::Error;
  throw InvalidArgument("unknown verdict " + s);
}

BoundEntry make_entry(std::string bound, std::string q, std::optional<std::int64_t> n,
                      std::optional<std::int64_t> m, std::int64_t lhs, std::int64_t rhs, std::string note) {
  BoundEntry e{std::move(bound), std::move(q), n, m, lhs, rhs, Verdict::Pass, std::move(note)};
  e.verdict = lhs <= rhs ? Verdict::Pass : Verdict::Fail;
  return e;
}

BoundEntry skipped_entry(std::string bound, std::string q, std::string reason) {
  BoundEntry e{std::move(bound), std::move(q), std::nullopt, std::nullopt, 0, 0, Verdict::Skipped, std::move(reason)};
  return e;
}

BoundEntry error_entry(std::string bound, std::string q, std::optional<std::int64_t> n,
                       std::optional<std::int64_t> m, std::string what) {
  return BoundEntry{std::move(bound), std::move(q), n, m, 0, 0, Verdict::Error, std::move(what)};
}

namespace {

// (4I)^((d-1)!) - I, or nullopt when it does not fit.
std::optional<std::int64_t> power_term(std::int64_t ia, std::size_t d) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k + 1 <= d; ++k) {
    f *= k;
    if (f > 64) return std::nullopt;
  }
  if (ia == 0) return 0;
  __int128 v = 1;
  for (std::uint64_t k = 0; k < f; ++k) {
    v *= 4 * ia;
    if (v > (static_cast<__int128>(1) << 62)) return std::nullopt;
  }
  return static_cast<std::int64_t>(v) - ia;
}

}  // namespace

std::optional<std::int64_t> regularity_bound(std::int64_t ia, std::size_t d) {
  if (d <= 1) return std::max<std::int64_t>(ia - 1, 0);
  auto t = power_term(ia, d);
  if (!t) return std::nullopt;
  return std::max<std::int64_t>(*t - 1, 0);
}

std::optional<std::int64_t> postulation_bound(std::int64_t ia, std::size_t d) {
  if (d <= 1) return std::max<std::int64_t>(ia, 1);
  auto t = power_term(ia, d);
  if (!t) return std::nullopt;
  return std::max<std::int64_t>(*t, 1);
}

}  // namespace gcmwb
