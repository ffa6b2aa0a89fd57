#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gcmwb {

enum class Verdict { Pass, Fail, Skipped, Error };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One checked inequality lhs <= rhs.
struct BoundEntry {
  std::string bound;  // e.g. "Thm2.5"
  std::string q;      // parameter ideal, printed
  std::optional<std::int64_t> n, m;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Verdict verdict = Verdict::Pass;
  std::string note;  // skip reason, error text, or extra evidence

  bool operator==(const BoundEntry&) const = default;
};

BoundEntry make_entry(std::string bound, std::string q, std::optional<std::int64_t> n,
                      std::optional<std::int64_t> m, std::int64_t lhs, std::int64_t rhs, std::string note = "");
BoundEntry skipped_entry(std::string bound, std::string q, std::string reason);
BoundEntry error_entry(std::string bound, std::string q, std::optional<std::int64_t> n,
                       std::optional<std::int64_t> m, std::string what);

/// Uniform regularity bound for G_Q(A): max{I-1, 0} for d = 1 and
/// max{(4I)^((d-1)!) - I - 1, 0} for d >= 2. nullopt on overflow.
std::optional<std::int64_t> regularity_bound(std::int64_t ia, std::size_t d);
/// Uniform postulation / relation-type bound: max{I, 1} for d = 1 and
/// max{(4I)^((d-1)!) - I, 1} for d >= 2.
std::optional<std::int64_t> postulation_bound(std::int64_t ia, std::size_t d);

}  // namespace gcmwb
