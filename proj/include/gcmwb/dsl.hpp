#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcmwb/local_ring.hpp"
#include "gcmwb/parse.hpp"

namespace gcmwb {

inline constexpr std::uint32_t kDefaultCharacteristic = 101;

enum class Command { Invariants, Graded, Rees, Suite, GcmTest };
std::string to_string(Command c);
std::optional<Command> command_from_string(std::string_view s);

struct ParamsDecl {
  std::string name;
  std::vector<Polynomial> elements;
};

/// One parsed job: the ring, named parameter lists and the run request.
struct JobSpec {
  RingPresentation ring;
  std::vector<ParamsDecl> params;
  Command command = Command::Suite;
  bool explicit_run = false;
  std::optional<unsigned> n, m;
  std::optional<std::uint64_t> seed;
};

/// ring <name> = F<p>[v1,...,vs] / (g1, ..., gk);
/// params <name> = (q1, ..., qd);
/// run <command> [with n=<int>, m=<int>, seed=<int>];
/// The field may be F<p>, QQ, k or omitted (k and omitted mean F101); the
/// relation list may be omitted. Throws ParseError with a position.
JobSpec parse_job(std::string_view text);

/// Canonical text that parse_job reads back to an equal JobSpec.
std::string serialize_job(const JobSpec& spec);

bool operator==(const JobSpec& a, const JobSpec& b);

}  // namespace gcmwb
