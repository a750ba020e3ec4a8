#pragma once

#include <vector>

#include "adspace/instance.hpp"
#include "adspace/rational.hpp"

namespace adspace {

/// Size-class split used by the combined heuristic: large > 1/2,
/// 1/4 < medium <= 1/2, small <= 1/4. Boundary sizes go to the
/// smaller class. Every ad lands in exactly one bucket, ids preserved.
struct ThirdsPartition {
  std::vector<Ad> large;
  std::vector<Ad> medium;
  std::vector<Ad> small;
};

ThirdsPartition classify_thirds(const std::vector<Ad>& ads);

/// epsilon / (2^(2^K) * 2^K * K): the size below which an ad is handled
/// fractionally by the scheme-for-fixed-K pipeline. Exact; the first factor
/// is computed as a big integer. Throws OverflowGuardError when K is large
/// enough that 2^(2^K) cannot reasonably be materialized (K > 20), and
/// ValidationError for epsilon <= 0 or K < 1.
Rational ptas_threshold(const Rational& epsilon, int slot_count);

/// Large means size >= ptas_threshold(epsilon, K); the boundary is large.
struct PtasPartition {
  std::vector<Ad> large;
  std::vector<Ad> small;
};

PtasPartition classify_ptas(const std::vector<Ad>& ads,
                            const Rational& epsilon, int slot_count);

}  // namespace adspace
