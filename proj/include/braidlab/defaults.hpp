#pragma once

// Every tunable default in one place. The CLI overrides these with flags only.

#include <string>
#include <vector>

#include "braidlab/seq.hpp"

namespace braidlab::defaults {

inline constexpr Index kWindow = 1024;
inline constexpr double kCapFactor = 2.0;
inline constexpr int kPrecision = 12;
inline constexpr Index kProbeRadius = 8;
/// Extra series terms on top of ceil(e * ||a||_1).
inline constexpr int kExtraTerms = 10;
inline constexpr int kQuadNodes = 16;
inline constexpr double kQuadTolerance = 1e-10;

inline std::vector<Index> probes() {
  std::vector<Index> out;
  for (Index n = -kProbeRadius; n <= kProbeRadius; ++n) out.push_back(n);
  return out;
}

/// The probe set in command-line syntax.
inline std::string probe_spec() {
  return std::to_string(-kProbeRadius) + ".." + std::to_string(kProbeRadius);
}

}  // namespace braidlab::defaults
