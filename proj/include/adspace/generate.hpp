#pragma once

#include <cstdint>

#include "adspace/instance.hpp"
#include "adspace/rational.hpp"

namespace adspace {

enum class SizeDistribution {
  /// p/q with q uniform in [2, 1000] and p uniform in [1, q].
  Uniform,
  /// Each ad uniformly picks the large (> 1/2), medium ((1/4, 1/2]) or small
  /// ((0, 1/4]) band, then a size within it. For 6 or more ads the draw is
  /// repeated until every band is hit.
  ThirdsMix,
  /// Unit fractions strictly below the width threshold for
  /// (ptas_epsilon, K), still with denominators at most 1000.
  PtasSmall,
};

struct GenerateParams {
  int ad_count = 0;
  int slot_count = 1;
  Variant variant = Variant::MaxSpaceR;
  SizeDistribution distribution = SizeDistribution::Uniform;
  std::uint64_t seed = 0;
  /// Only read for PtasSmall: the accuracy whose threshold bounds sizes.
  Rational ptas_epsilon = Rational(1, 2);
};

/// Deterministic random instance: the same params produce byte-identical
/// serialized output on every platform (the generator never goes through
/// distribution classes with unspecified algorithms). Windows are drawn as
/// release uniform in [1, K]; deadline uniform in [release, K] for
/// maxspace-rd, K otherwise (and release pinned to 1 for maxspace);
/// frequency uniform in [1, deadline - release + 1]. The result always
/// passes validate_instance.
Instance generate(const GenerateParams& params);

}  // namespace adspace
