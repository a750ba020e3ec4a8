#include "adspace/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "adspace/classify.hpp"
#include "adspace/dp_large.hpp"
#include "adspace/errors.hpp"

namespace adspace {

namespace {

const Rational kQuarter(1, 4);
const Rational kHalf(1, 2);
const Rational kThreeQuarters(3, 4);

std::vector<int> release_order(const std::vector<Ad>& ads) {
  std::vector<int> order(ads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ads[a].release != ads[b].release ? ads[a].release < ads[b].release
                                            : ads[a].id < ads[b].id;
  });
  return order;
}

void require_full_horizon(const Ad& ad, int slot_count, const char* who) {
  if (ad.deadline != slot_count) {
    throw ClassViolationError(std::string(who) + ": ad " +
                              std::to_string(ad.id) + " has deadline " +
                              std::to_string(ad.deadline) +
                              " before the last slot " +
                              std::to_string(slot_count));
  }
}

struct SlotState {
  Schedule schedule;
  std::vector<Rational> load;

  explicit SlotState(int slot_count)
      : schedule(slot_count), load(slot_count, 0) {}

  void add(int slot, int id, const Rational& size) {
    schedule.slots[slot - 1].push_back(id);
    load[slot - 1] += size;
  }
};

// First slot >= from (1-based) outside `chosen` with fullness < 1/4.
int first_light_slot(const SlotState& state, const std::vector<int>& chosen,
                     int from) {
  for (int j = from; j <= state.schedule.slot_count(); ++j) {
    if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
    if (state.load[j - 1] < kQuarter) return j;
  }
  return 0;
}

// Least-full slot >= from outside `chosen`, smallest index on ties.
int least_full_slot(const SlotState& state, const std::vector<int>& chosen,
                    int from) {
  int arg = 0;
  for (int j = from; j <= state.schedule.slot_count(); ++j) {
    if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
    if (arg == 0 || state.load[j - 1] < state.load[arg - 1]) arg = j;
  }
  return arg;
}

template <typename SizeOf>
std::vector<int> extract_move_set_impl(const std::vector<int>& source,
                                       const std::vector<int>& forbidden,
                                       SizeOf&& size_of) {
  std::unordered_set<int> blocked(forbidden.begin(), forbidden.end());
  std::vector<int> bundle;
  Rational sum = 0;
  for (int id : source) {
    if (blocked.count(id)) continue;
    bundle.push_back(id);
    sum += size_of(id);
    if (sum >= kQuarter) return bundle;
  }
  throw InternalError(
      "extract_move_set: movable ads total below 1/4, which the slot "
      "fullness preconditions rule out");
}

}  // namespace

GreedyResult schedule_medium(const std::vector<Ad>& medium_ads,
                             int slot_count) {
  for (const Ad& ad : medium_ads) {
    if (ad.size <= kQuarter || ad.size > kHalf) {
      throw ClassViolationError("schedule_medium: ad " +
                                std::to_string(ad.id) + " has size " +
                                to_string(ad.size) +
                                ", needs 1/4 < size <= 1/2");
    }
    require_full_horizon(ad, slot_count, "schedule_medium");
  }

  SlotState state(slot_count);
  GreedyTrace trace;
  int iteration = 0;
  for (int idx : release_order(medium_ads)) {
    const Ad& ad = medium_ads[idx];
    std::vector<int> chosen;
    bool placeable = true;
    for (int copy = 0; copy < ad.frequency; ++copy) {
      int pick = first_light_slot(state, chosen, ad.release);
      if (pick == 0) {
        int arg = least_full_slot(state, chosen, ad.release);
        if (arg != 0 && state.load[arg - 1] <= 1 - ad.size) pick = arg;
      }
      if (pick == 0) {
        placeable = false;
        break;
      }
      chosen.push_back(pick);
    }
    if (placeable) {
      for (int j : chosen) state.add(j, ad.id, ad.size);
    } else {
      trace.discarded.push_back(ad.id);
    }
    ++iteration;
  }
  return {std::move(state.schedule), std::move(trace)};
}

GreedyResult schedule_small(const std::vector<Ad>& small_ads, int slot_count) {
  std::unordered_map<int, Rational> size_by_id;
  for (const Ad& ad : small_ads) {
    if (ad.size > kQuarter) {
      throw ClassViolationError("schedule_small: ad " + std::to_string(ad.id) +
                                " has size " + to_string(ad.size) +
                                ", needs size <= 1/4");
    }
    require_full_horizon(ad, slot_count, "schedule_small");
    size_by_id.emplace(ad.id, ad.size);
  }

  SlotState state(slot_count);
  GreedyTrace trace;
  int iteration = 0;
  for (int idx : release_order(small_ads)) {
    const Ad& ad = small_ads[idx];
    std::vector<int> chosen;
    bool placeable = true;
    for (int copy = 0; copy < ad.frequency; ++copy) {
      int pick = first_light_slot(state, chosen, ad.release);
      if (pick == 0) {
        // A slot already chosen for this ad can still be nearly empty (its
        // copy is only committed at the end). If some free slot is packed to
        // 3/4, shift a bundle from it into the nearly empty chosen slot and
        // take the freed slot for this copy.
        int to = 0;
        for (int j : chosen) {
          if (state.load[j - 1] < kQuarter && (to == 0 || j < to)) to = j;
        }
        int from = 0;
        if (to != 0) {
          for (int j = ad.release; j <= slot_count; ++j) {
            if (std::find(chosen.begin(), chosen.end(), j) != chosen.end())
              continue;
            if (state.load[j - 1] >= kThreeQuarters) {
              from = j;
              break;
            }
          }
        }
        if (to != 0 && from != 0) {
          std::vector<int> bundle = extract_move_set_impl(
              state.schedule.slots[from - 1], state.schedule.slots[to - 1],
              [&](int id) { return size_by_id.at(id); });
          std::unordered_set<int> moving(bundle.begin(), bundle.end());
          auto& src = state.schedule.slots[from - 1];
          src.erase(std::remove_if(src.begin(), src.end(),
                                   [&](int id) { return moving.count(id); }),
                    src.end());
          for (int id : bundle) {
            state.schedule.slots[to - 1].push_back(id);
            state.load[from - 1] -= size_by_id.at(id);
            state.load[to - 1] += size_by_id.at(id);
          }
          trace.moves.push_back({iteration, from, to, std::move(bundle)});
          pick = from;
        }
      }
      if (pick == 0) {
        int arg = least_full_slot(state, chosen, ad.release);
        if (arg != 0 && state.load[arg - 1] <= 1 - ad.size) pick = arg;
      }
      if (pick == 0) {
        placeable = false;
        break;
      }
      chosen.push_back(pick);
    }
    if (placeable) {
      for (int j : chosen) state.add(j, ad.id, ad.size);
    } else {
      // Moves already made for this ad stay; they only rebalanced slots.
      trace.discarded.push_back(ad.id);
    }
    ++iteration;
  }
  return {std::move(state.schedule), std::move(trace)};
}

std::vector<int> extract_move_set(const std::vector<int>& source,
                                  const std::vector<int>& forbidden,
                                  const Instance& instance) {
  return extract_move_set_impl(source, forbidden, [&](int id) {
    if (id < 0 || id >= (int)instance.ads.size()) {
      throw UnknownAdError("extract_move_set: unknown ad id " +
                           std::to_string(id));
    }
    return instance.ads[id].size;
  });
}

FirstFitResult first_fit(const Instance& instance) {
  std::vector<int> order(instance.ads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Ad& x = instance.ads[a];
    const Ad& y = instance.ads[b];
    if (x.release != y.release) return x.release < y.release;
    if (x.deadline != y.deadline) return x.deadline < y.deadline;
    return x.id < y.id;
  });

  SlotState state(instance.slot_count);
  for (int idx : order) {
    const Ad& ad = instance.ads[idx];
    std::vector<int> chosen;
    for (int j = ad.release; j <= ad.deadline; ++j) {
      if ((int)chosen.size() == ad.frequency) break;
      if (state.load[j - 1] + ad.size <= 1) chosen.push_back(j);
    }
    if ((int)chosen.size() < ad.frequency) {
      return {std::move(state.schedule), false};
    }
    for (int j : chosen) state.add(j, ad.id, ad.size);
  }
  return {std::move(state.schedule), true};
}

Schedule combined(const Instance& instance) {
  for (const Ad& ad : instance.ads) {
    require_full_horizon(ad, instance.slot_count, "combined");
  }
  ThirdsPartition parts = classify_thirds(instance.ads);
  DpResult on_large = dp_large(parts.large, instance.slot_count);
  GreedyResult on_medium = schedule_medium(parts.medium, instance.slot_count);
  GreedyResult on_small = schedule_small(parts.small, instance.slot_count);

  Schedule best = std::move(on_large.schedule);
  Rational best_value = on_large.value;
  Rational medium_value = total_fullness(instance, on_medium.schedule);
  if (medium_value > best_value) {
    best = std::move(on_medium.schedule);
    best_value = medium_value;
  }
  Rational small_value = total_fullness(instance, on_small.schedule);
  if (small_value > best_value) {
    best = std::move(on_small.schedule);
  }
  return best;
}

}  // namespace adspace
