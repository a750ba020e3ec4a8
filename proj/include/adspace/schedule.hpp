#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adspace/instance.hpp"
#include "adspace/rational.hpp"

namespace adspace {

/// An assignment of ad copies to slots. slots[j-1] holds slot j's ad ids in
/// insertion order, which makes iteration (and therefore every downstream
/// tie-break) deterministic.
struct Schedule {
  std::vector<std::vector<int>> slots;

  Schedule() = default;
  explicit Schedule(int slot_count) : slots(slot_count) {}

  int slot_count() const { return (int)slots.size(); }
};

enum class ViolationKind {
  Capacity,   // a slot's total size exceeds 1
  Frequency,  // an ad appears a positive number of times != its frequency
  Release,    // a copy sits before the ad's release slot
  Deadline,   // a copy sits after the ad's deadline slot
  Duplicate,  // the same ad twice in one slot
  UnknownAd,  // an id outside [0, n)
};

std::string_view violation_kind_name(ViolationKind kind);

/// `index` is the 1-based slot for Capacity and the ad id otherwise.
struct Violation {
  ViolationKind kind;
  int index;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

/// Total size of the ads in slot `slot` (1-based).
/// Throws UnknownAdError on an id outside [0, n).
Rational slot_fullness(const Instance& instance, const Schedule& schedule,
                       int slot);

/// Sum of slot_fullness over all slots; the objective value.
Rational total_fullness(const Instance& instance, const Schedule& schedule);

/// Checks every feasibility rule and reports all violations, not just the
/// first: capacity per slot, all-or-none frequency per ad, release/deadline
/// windows, in-slot duplicates, and id range.
FeasibilityReport verify(const Instance& instance, const Schedule& schedule);

}  // namespace adspace
