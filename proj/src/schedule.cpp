#include "adspace/schedule.hpp"

#include <map>
#include <set>

#include "adspace/errors.hpp"

namespace adspace {

namespace {

void require_matching_slots(const Instance& instance,
                            const Schedule& schedule) {
  if (schedule.slot_count() != instance.slot_count) {
    throw ValidationError(
        -1, "slot_count",
        "schedule has " + std::to_string(schedule.slot_count()) +
            " slots, instance has " + std::to_string(instance.slot_count));
  }
}

}  // namespace

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Capacity:
      return "CAPACITY";
    case ViolationKind::Frequency:
      return "FREQUENCY";
    case ViolationKind::Release:
      return "RELEASE";
    case ViolationKind::Deadline:
      return "DEADLINE";
    case ViolationKind::Duplicate:
      return "DUPLICATE";
    case ViolationKind::UnknownAd:
      return "UNKNOWN_AD";
  }
  return "";
}

Rational slot_fullness(const Instance& instance, const Schedule& schedule,
                       int slot) {
  require_matching_slots(instance, schedule);
  Rational sum = 0;
  for (int id : schedule.slots.at(slot - 1)) {
    if (id < 0 || id >= (int)instance.ads.size()) {
      throw UnknownAdError("slot " + std::to_string(slot) +
                           " references unknown ad id " + std::to_string(id));
    }
    sum += instance.ads[id].size;
  }
  return sum;
}

Rational total_fullness(const Instance& instance, const Schedule& schedule) {
  require_matching_slots(instance, schedule);
  Rational sum = 0;
  for (int j = 1; j <= instance.slot_count; ++j) {
    sum += slot_fullness(instance, schedule, j);
  }
  return sum;
}

FeasibilityReport verify(const Instance& instance, const Schedule& schedule) {
  require_matching_slots(instance, schedule);
  FeasibilityReport report;
  const int n = (int)instance.ads.size();

  // Slot-local checks first, in slot order.
  std::map<int, std::vector<int>> copy_slots;  // known id -> slots holding it
  for (int j = 1; j <= instance.slot_count; ++j) {
    Rational load = 0;
    std::set<int> seen;
    for (int id : schedule.slots[j - 1]) {
      if (id < 0 || id >= n) {
        report.violations.push_back(
            {ViolationKind::UnknownAd, id,
             "slot " + std::to_string(j) + " references unknown ad id " +
                 std::to_string(id)});
        continue;
      }
      if (!seen.insert(id).second) {
        report.violations.push_back(
            {ViolationKind::Duplicate, id,
             "ad " + std::to_string(id) + " appears twice in slot " +
                 std::to_string(j)});
        continue;
      }
      load += instance.ads[id].size;
      copy_slots[id].push_back(j);
    }
    if (load > 1) {
      report.violations.push_back(
          {ViolationKind::Capacity, j,
           "slot " + std::to_string(j) + " has fullness " + to_string(load)});
    }
  }

  // Per-ad checks, in id order.
  for (const auto& [id, slots] : copy_slots) {
    const Ad& ad = instance.ads[id];
    if ((int)slots.size() != ad.frequency) {
      report.violations.push_back(
          {ViolationKind::Frequency, id,
           "ad " + std::to_string(id) + " has " +
               std::to_string(slots.size()) + " copies, frequency is " +
               std::to_string(ad.frequency)});
    }
    for (int j : slots) {
      if (j < ad.release) {
        report.violations.push_back(
            {ViolationKind::Release, id,
             "ad " + std::to_string(id) + " in slot " + std::to_string(j) +
                 " before release " + std::to_string(ad.release)});
      }
      if (j > ad.deadline) {
        report.violations.push_back(
            {ViolationKind::Deadline, id,
             "ad " + std::to_string(id) + " in slot " + std::to_string(j) +
                 " after deadline " + std::to_string(ad.deadline)});
      }
    }
  }

  return report;
}

}  // namespace adspace
