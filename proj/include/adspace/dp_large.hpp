#pragma once

#include <vector>

#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

struct DpOptions {
  /// By default every ad must have deadline K: ads that only block the tail
  /// of the horizon are rejected rather than silently mishandled. Opting in
  /// clamps each ad's admissible ending slot to its deadline instead. The
  /// extension stays a heuristic: it optimizes over schedules that place ads
  /// in release order, which general deadlines can beat (see the tests), so
  /// it is guaranteed feasible and never above the true optimum, not equal
  /// to it.
  bool allow_deadlines = false;
};

struct DpResult {
  Schedule schedule;
  Rational value;
};

/// Exact optimum for ads wider than half a slot, where no two ads share a
/// slot and taken ads can be assumed to sit in consecutive slots in release
/// order. Knapsack-style table over (ads sorted by release then id, slot
/// prefix); an ad taken with ending slot j occupies j-w+1..j. Ties prefer
/// skipping the ad, and backtracking starts from the smallest slot prefix
/// that achieves the optimum, so the reported schedule is deterministic and
/// packed leftmost. Throws ClassViolationError if an ad has size <= 1/2, or
/// deadline < K without allow_deadlines.
DpResult dp_large(const std::vector<Ad>& large_ads, int slot_count,
                  const DpOptions& options = {});

}  // namespace adspace
