#pragma once

#include <cstddef>
#include <cstdint>

namespace colhur {

/// Enumeration caps. Everything in this library is explicit finite
/// enumeration, so the limits are configuration rather than constants.
struct Limits {
  std::size_t maxDegree = 8;              // N accepted by the front ends
  std::uint64_t maxYoung = 1'000'000;     // |Y| and single-class sizes
  std::size_t maxNecklaceDegree = 10;     // neck mess enumeration
  std::size_t maxScanDegree = 8;          // full scans of S_N
  std::size_t maxVerifyDegree = 6;        // all-triple verification

  /// Applies COLHUR_MAX_N, COLHUR_MAX_YOUNG, COLHUR_MAX_VERIFY_N overrides.
  static Limits fromEnvironment();
  static Limits fromEnvironment(Limits base);
};

}  // namespace colhur
