#pragma once

#include <cstdint>
#include <optional>

namespace gcmwb {

/// Caps and knobs shared by every computation. Every cap hit raises CapExceeded.
struct EngineConfig {
  unsigned cap_trunc = 1024;  // largest truncation power N
  unsigned cap_fit = 40;      // largest n sampled for Hilbert–Samuel fits
  unsigned cap_saturate = 64;
  unsigned window = 3;             // stabilization window w
  unsigned divergence_factor = 10; // I(A) trace threshold = factor * (first + 1)
  unsigned n_max_ia = 10;          // powers sampled for I(A)
  std::optional<unsigned> horizon; // regularity horizon override
  std::uint64_t seed = 20240229;
  unsigned filter_retries = 16;
  unsigned filter_slack = 3;  // verification window past the horizon
  unsigned threads = 1;
};

}  // namespace gcmwb
