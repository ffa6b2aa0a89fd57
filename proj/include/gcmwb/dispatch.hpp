#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gcmwb/config.hpp"
#include "gcmwb/dsl.hpp"
#include "gcmwb/harness.hpp"

namespace gcmwb {

/// Settings from command line flags or GCMWB_* variables; these win over
/// the values in the job's `with` clause.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> cap_trunc, cap_fit, horizon, threads;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

struct DispatchResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Engine configuration and grid for a job: `with n=N` sets the grid to N and
/// the Hilbert–Samuel sampling cap to N·w; overrides are applied last.
EngineConfig job_config(const JobSpec& spec, const Overrides& ov, Grid& grid);

/// Runs the job's command. Exit codes: 0 all pass (or a completed gcm-test,
/// whatever its verdict), 1 on a FAIL or contradiction, 2 on an engine error.
DispatchResult dispatch(const JobSpec& spec, const Overrides& ov, ReportFormat fmt);

/// Parses and runs; parse errors become exit code 2 with a positioned message.
DispatchResult run_text(const std::string& text, const Overrides& ov, ReportFormat fmt);

}  // namespace gcmwb
