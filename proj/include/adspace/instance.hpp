#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "adspace/rational.hpp"

namespace adspace {

/// Which window constraints the instance carries. A plain banner problem
/// pins every ad to the full horizon; the release variant adds first
/// admissible slots; the release+deadline variant adds last admissible slots.
/// Internally every ad always stores both bounds, so one solver path serves
/// all three.
enum class Variant { MaxSpace, MaxSpaceR, MaxSpaceRD };

std::string_view variant_name(Variant variant);
std::optional<Variant> variant_from_name(std::string_view name);

struct Ad {
  int id = 0;          // 0..n-1, position in the instance's ad list
  Rational size;       // slot fraction in (0, 1], already normalized
  int frequency = 1;   // copies required if the ad is scheduled at all
  int release = 1;     // first admissible slot, 1-based
  int deadline = 1;    // last admissible slot, 1-based
};

struct Instance {
  int slot_count = 1;        // K
  Rational slot_height = 1;  // raw L, kept so serialization round-trips
  Variant variant = Variant::MaxSpaceRD;
  std::vector<Ad> ads;
};

/// Enforces the structural invariants: K >= 1, L > 0, ids equal to list
/// positions, 0 < size <= 1, 1 <= release <= deadline <= K,
/// 1 <= frequency <= deadline - release + 1, and the per-variant window
/// rules (MaxSpace: release 1 and deadline K; MaxSpaceR: deadline K).
/// Throws ValidationError on the first violation.
void validate_instance(const Instance& instance);

}  // namespace adspace
