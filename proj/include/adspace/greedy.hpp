#pragma once

#include <vector>

#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

/// One cross-slot content move performed while placing an ad: a bundle of
/// previously scheduled ads shifted out of a crowded slot into a nearly
/// empty one to make room.
struct MoveRecord {
  int iteration;    // 0-based position in the processing order
  int from_slot;    // 1-based
  int to_slot;      // 1-based
  std::vector<int> moved_ads;
};

struct GreedyTrace {
  std::vector<int> discarded;   // ad ids, in processing order
  std::vector<MoveRecord> moves;
};

struct GreedyResult {
  Schedule schedule;
  GreedyTrace trace;
};

/// Places ads with 1/4 < size <= 1/2, in (release, id) order, copy by copy:
/// first slot below fullness 1/4 if one exists past the release, otherwise
/// the least-full slot (smallest index on ties) when the copy still fits.
/// An ad whose copies cannot all be placed is discarded whole. Throws
/// ClassViolationError on a size outside (1/4, 1/2] or a deadline before K.
GreedyResult schedule_medium(const std::vector<Ad>& medium_ads,
                             int slot_count);

/// Places ads with size <= 1/4, same processing order, with one extra move:
/// when no near-empty slot is free for a copy but some slot already chosen
/// for this ad is still below 1/4 and another is at 3/4 or more, a bundle
/// of ads totaling [1/4, 1/2] is moved from the crowded slot into the
/// near-empty chosen one and the copy takes the freed slot. Moves performed
/// for an ad that is later discarded are kept; they never hurt feasibility.
/// Throws ClassViolationError on a size above 1/4 or a deadline before K.
GreedyResult schedule_small(const std::vector<Ad>& small_ads, int slot_count);

/// The bundle extraction behind schedule_small's move: scans `source` in
/// insertion order, skips ids already present in `forbidden`, and accumulates
/// until the bundle's total size first reaches 1/4. With every ad at most
/// 1/4 the result lands in [1/4, 1/2]. Requires source fullness >= 3/4 and
/// forbidden fullness < 1/4; under those preconditions enough movable mass
/// always exists, so falling short throws InternalError (a bug, not an input
/// property).
std::vector<int> extract_move_set(const std::vector<int>& source,
                                  const std::vector<int>& forbidden,
                                  const Instance& instance);

struct FirstFitResult {
  Schedule schedule;
  bool complete;  // every ad was scheduled
};

/// Greedy baseline over all ads in (release, deadline, id) order: each copy
/// goes to the first slot in the ad's window with room. Stops at the first
/// ad that does not fit entirely (that ad's partial copies are not kept).
FirstFitResult first_fit(const Instance& instance);

/// Best of the three class-specific runs (exact on large, greedy on medium,
/// greedy-with-moves on small), each on its own class only; ties prefer the
/// large, then the medium solution. Requires every deadline to be K.
Schedule combined(const Instance& instance);

}  // namespace adspace
