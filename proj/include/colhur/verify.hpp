#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "colhur/coloring.hpp"
#include "colhur/limits.hpp"
#include "colhur/serialize.hpp"

namespace colhur {

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random (u, v) samples for surface checks when S_N x S_N is too large to exhaust.
  std::size_t randomPairs = 1000;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  Coloring coloring;
  std::vector<CheckResult> checks;
  /// Informational lines: class-size and labeled-surface normalizations.
  std::vector<std::string> notes;

  bool passed() const;
  std::string text() const;
  Json json() const;
};

/// Runs the full invariant suite for one coloring. Throws CapExceeded when
/// N exceeds limits.maxVerifyDegree; check failures are recorded, not thrown.
VerifyReport runVerify(const Coloring& coloring, const VerifyOptions& options = {}, const Limits& limits = {});

}  // namespace colhur
