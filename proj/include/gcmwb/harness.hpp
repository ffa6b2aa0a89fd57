#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcmwb/bounds.hpp"
#include "gcmwb/config.hpp"
#include "gcmwb/invariants.hpp"
#include "gcmwb/local_ring.hpp"

namespace gcmwb {

inline constexpr const char* kReportVersion = "gcmwb-report/1";

struct Grid {
  unsigned n_max = 5;
  unsigned m_max = 2;
};

/// Per parameter ideal: the computed invariants next to the bound entries.
struct QuerySummary {
  std::string q;
  std::uint64_t colength = 0;
  std::uint64_t multiplicity = 0;
  std::int64_t iq = 0;
  IAEstimate ia;
  std::optional<std::int64_t> reg, postulation, reltype;
  std::vector<std::uint64_t> hilbert;
  std::vector<std::string> filter_regular;
  std::optional<std::string> error;

  bool operator==(const QuerySummary&) const = default;
};

struct ReportSummary {
  unsigned pass = 0, fail = 0, skipped = 0, error = 0, contradictions = 0;
  bool operator==(const ReportSummary&) const = default;
};

struct ConfigSnapshot {
  unsigned cap_trunc = 0, cap_fit = 0, cap_saturate = 0, window = 0, divergence_factor = 0, n_max_ia = 0;
  unsigned filter_retries = 0, filter_slack = 0;
  std::optional<unsigned> horizon;
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 0;
  unsigned grid_n = 0, grid_m = 0;

  bool operator==(const ConfigSnapshot&) const = default;
};

struct BoundReport {
  std::string ring;
  std::size_t d = 0;
  IAEstimate ia;  // I(A) over the sampled power families (max of stabilized values)
  bool gcm_verified = false;
  GcmColonReport colon;
  std::vector<QuerySummary> queries;
  std::vector<BoundEntry> entries;
  ReportSummary summary;
  ConfigSnapshot config;
  std::vector<std::string> notes;

  bool operator==(const BoundReport&) const = default;
};

/// Runs every bound for every Q. A FAIL on a gCM-verified ring counts as a
/// contradiction. Entries are sorted by bound id, Q, n, m.
BoundReport run_suite(const LocalRing& a, const std::vector<ParameterSystem>& qs, Grid grid);

/// Recomputes the summary counts from the entries.
ReportSummary summarize(const std::vector<BoundEntry>& entries, bool gcm_verified);

struct SopFamily {
  std::string label;
  std::vector<ParameterSystem> members;  // indexed by the family parameter t = 1, 2, ...
};

struct FamilySample {
  std::string sop;
  std::optional<unsigned> colon_exponent;
  unsigned reltype = 1;            // of the ideal in A
  unsigned quotient_reltype = 1;   // max over A/J^k, J a proper prefix, k = 1, 2
  bool proof_containment = true;   // colon exponent <= r_obs * s
};

struct FamilyTrace {
  std::string label;
  std::vector<FamilySample> samples;
  bool growth = false;
  bool bounded = false;
};

struct Theorem28Report {
  std::string ring;
  std::vector<FamilyTrace> families;
  unsigned r_obs = 1;
  std::size_t ambient_vars = 0;
  std::string verdict;  // "gCM-consistent (uniformly bounded)", "not gCM (growth detected)", "inconclusive"
  std::string witness;  // family label showing growth
  std::string scope;
};

/// Samples the families (at most `budget` members in total) and classifies
/// the observed colon exponents and relation types.
Theorem28Report theorem28_experiment(const LocalRing& a, const std::vector<SopFamily>& families, unsigned budget);

/// Default families for a base system: the power family (x_i^t) and the
/// perturbations (x_i + v^t) for each ambient variable v.
std::vector<SopFamily> default_families(const LocalRing& a, const ParameterSystem& base, unsigned length);

enum class ReportFormat { Json, Csv, Text };
ReportFormat report_format_from_string(const std::string& s);

std::string emit_report(const BoundReport& rep, ReportFormat fmt);
/// Inverse of the json emitter.
BoundReport parse_report_json(const std::string& text);

std::string emit_theorem28(const Theorem28Report& rep, ReportFormat fmt);

}  // namespace gcmwb
