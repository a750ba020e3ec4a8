#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adspace/brute_force.hpp"
#include "adspace/generate.hpp"
#include "adspace/instance.hpp"

namespace adspace {

struct BenchRecord {
  std::string instance_id;
  std::uint64_t seed = 0;
  int ad_count = 0;
  int slot_count = 0;
  Variant variant = Variant::MaxSpaceR;
  std::string algorithm;
  Rational value;
  std::optional<Rational> oracle;  // empty when the oracle was out of reach
  double runtime_ms = 0;
  bool feasible = false;
};

struct BenchParams {
  std::uint64_t seed_begin = 1;
  std::uint64_t seed_end = 200;
  int ad_count = 6;
  int slot_count = 4;
  Variant variant = Variant::MaxSpaceR;
  SizeDistribution distribution = SizeDistribution::ThirdsMix;
  OracleLimits limits;
};

/// One generated instance per seed; rows for the oracle itself ("exact"),
/// the class-split heuristic ("combined") and "first-fit", each verified and
/// timed. Requires a variant with full horizons (combined needs them).
std::vector<BenchRecord> run_ratio_suite(const BenchParams& params);

std::string bench_csv_header();
std::string bench_record_csv(const BenchRecord& record);

}  // namespace adspace
