#pragma once

#include <cstdint>

#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

struct OracleLimits {
  int max_ads = 9;
  std::uint64_t max_states = 100'000'000;
};

struct BruteForceResult {
  Schedule schedule;
  Rational value;
  std::uint64_t states = 0;  // search nodes visited
};

/// Exhaustive optimum. For each ad, in id order, the search tries "discarded"
/// first and then every frequency-sized subset of [release, deadline] in
/// lexicographic order, pruning branches that overfill a slot or provably
/// cannot beat the incumbent. The first optimum in enumeration order is
/// returned, which pins the schedule (not just the value) for a given input.
/// Throws BudgetExceededError if the instance has more than max_ads ads or
/// the search visits more than max_states nodes; it never returns a partial
/// search's best as the optimum.
BruteForceResult brute_force(const Instance& instance,
                             const OracleLimits& limits = {});

}  // namespace adspace
