#include "adspace/brute_force.hpp"

#include <boost/multiprecision/integer.hpp>
#include <vector>

#include "adspace/errors.hpp"

namespace adspace {

namespace {

// Sorted w-subsets of {lo..hi} in lexicographic order.
std::vector<std::vector<int>> combinations(int lo, int hi, int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if ((int)pick.size() == w) {
      out.push_back(pick);
      return;
    }
    for (int j = next; hi - j + 1 >= w - (int)pick.size(); ++j) {
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

struct Search {
  const Instance& instance;
  const OracleLimits& limits;
  // Sizes scaled to a common denominator so the hot loop is pure integers.
  BigInt denom = 1;
  std::vector<BigInt> size;              // scaled ad size
  std::vector<BigInt> gain;              // size * frequency
  std::vector<BigInt> suffix_gain;       // total gain of ads i..n-1
  std::vector<std::vector<std::vector<int>>> placements;
  std::vector<BigInt> load;              // scaled per-slot fullness
  std::vector<int> choice;               // -1 = discarded, else placement idx
  std::vector<int> best_choice;
  BigInt current = 0;
  BigInt best = -1;
  std::uint64_t states = 0;

  explicit Search(const Instance& inst, const OracleLimits& lim)
      : instance(inst), limits(lim) {
    const int n = (int)inst.ads.size();
    for (const Ad& ad : inst.ads) {
      denom = boost::multiprecision::lcm(denom, denominator(ad.size));
    }
    size.resize(n);
    gain.resize(n);
    placements.resize(n);
    for (int i = 0; i < n; ++i) {
      const Ad& ad = inst.ads[i];
      size[i] = numerator(ad.size) * (denom / denominator(ad.size));
      gain[i] = size[i] * ad.frequency;
      placements[i] = combinations(ad.release, ad.deadline, ad.frequency);
    }
    suffix_gain.assign(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix_gain[i] = suffix_gain[i + 1] + gain[i];
    load.assign(inst.slot_count, 0);
    choice.assign(n, -1);
  }

  void run(int i) {
    if (++states > limits.max_states) {
      throw BudgetExceededError(
          "oracle state budget exhausted after " + std::to_string(states - 1) +
          " nodes; raise max_states or shrink the instance");
    }
    const int n = (int)instance.ads.size();
    if (i == n) {
      if (current > best) {
        best = current;
        best_choice = choice;
      }
      return;
    }
    // Even scheduling every remaining ad cannot beat the incumbent.
    if (best >= 0 && current + suffix_gain[i] <= best) return;

    choice[i] = -1;
    run(i + 1);

    for (int p = 0; p < (int)placements[i].size(); ++p) {
      const auto& slots = placements[i][p];
      bool fits = true;
      for (int j : slots) {
        if (load[j - 1] + size[i] > denom) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (int j : slots) load[j - 1] += size[i];
      current += gain[i];
      choice[i] = p;
      run(i + 1);
      choice[i] = -1;
      current -= gain[i];
      for (int j : slots) load[j - 1] -= size[i];
    }
  }
};

}  // namespace

BruteForceResult brute_force(const Instance& instance,
                             const OracleLimits& limits) {
  const int n = (int)instance.ads.size();
  if (n > limits.max_ads) {
    throw BudgetExceededError("oracle limited to " +
                              std::to_string(limits.max_ads) + " ads, got " +
                              std::to_string(n));
  }

  Search search(instance, limits);
  search.run(0);

  BruteForceResult result;
  result.schedule = Schedule(instance.slot_count);
  for (int i = 0; i < (int)search.best_choice.size(); ++i) {
    int p = search.best_choice[i];
    if (p < 0) continue;
    for (int j : search.placements[i][p]) {
      result.schedule.slots[j - 1].push_back(i);
    }
  }
  result.value = Rational(search.best < 0 ? BigInt(0) : search.best) /
                 Rational(search.denom);
  result.states = search.states;
  return result;
}

}  // namespace adspace
