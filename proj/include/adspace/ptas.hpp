#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "adspace/flow.hpp"
#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

/// A set of slots as a bitmask: bit j-1 set means slot j belongs to the
/// type. An ad is compatible with a type when the type has exactly the ad's
/// frequency slots and all of them lie in [release, deadline].
using TypeMask = std::uint32_t;

int type_cardinality(TypeMask type);
bool type_contains(TypeMask type, int slot);  // 1-based
bool type_compatible(const Ad& ad, TypeMask type);
std::vector<int> type_slots(TypeMask type, int slot_count);

/// A concrete placement of a subset of the wide ads: each assigned ad gets
/// one compatible type, no slot overfills. slot_load is derived from the
/// placements, kept alongside so consumers need no recomputation.
struct Configuration {
  std::vector<std::pair<int, TypeMask>> placements;  // (ad id, type)
  std::vector<Rational> slot_load;                   // per slot, size K
};

Schedule configuration_schedule(const Configuration& config, int slot_count);

/// Per-slot room left under a configuration: 1 - slot_load[j].
std::vector<Rational> residual_capacities(const Configuration& config);

/// Shared work counter for the enumerations; `charge` throws
/// BudgetExceededError once the limit is crossed.
struct Budget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;

  explicit Budget(std::uint64_t limit) : limit(limit) {}
  void charge(const char* what);
};

/// Every feasible assignment of the given ads to types, depth-first: ads in
/// the given (id) order, each either unassigned or mapped to a compatible
/// type in increasing mask order, slot capacities respected at every step.
/// The empty configuration is always first. Each emitted configuration
/// charges the budget once.
void for_each_configuration(
    const std::vector<Ad>& wide_ads, int slot_count, Budget& budget,
    const std::function<void(const Configuration&)>& emit);

std::vector<Configuration> enumerate_configurations(
    const std::vector<Ad>& wide_ads, int slot_count, std::uint64_t budget);

/// Integer caps per type: type t may hold narrow-ad mass up to
/// count[t] * epsilon per slot it contains. count values range over
/// 0..1/epsilon (1/epsilon must be integral).
struct CapacityVector {
  std::vector<int> count;  // indexed by TypeMask value, size 2^K
};

/// Every capacity vector compatible with the per-slot residuals: for each
/// slot j, the counts of the types containing j total at most residual[j]
/// once scaled by epsilon. Types marked unusable are pinned to zero (the
/// public overload marks everything usable). Vectors come out in increasing
/// lexicographic order of counts; each emitted vector charges the budget.
void for_each_capacity_vector(
    const std::vector<Rational>& residual, const Rational& epsilon,
    const std::vector<char>& usable, Budget& budget,
    const std::function<void(const CapacityVector&)>& emit);

std::vector<CapacityVector> enumerate_capacity_vectors(
    const std::vector<Rational>& residual, const Rational& epsilon,
    std::uint64_t budget);

struct FlowOptions {
  /// Scale the type->sink capacities as |t| * c_t instead of
  /// |t| * c_t * epsilon. Kept for comparing the two conventions; the
  /// default (scaled) form is what keeps rounded solutions within the caps.
  bool sink_capacity_no_eps = false;
};

/// Bipartite network for fractionally packing the narrow ads into the caps:
/// source -> ad with capacity frequency * size, ad -> compatible type
/// unbounded, type -> sink with capacity |t| * count[t] * epsilon.
struct SmallFlowNetwork {
  FlowNetwork network;
  int slot_count = 0;
  std::vector<int> ad_ids;  // ad node order
  // For each edge, the (ad id, type) it represents; empty for source/sink
  // edges.
  std::vector<std::optional<std::pair<int, TypeMask>>> edge_labels;
};

SmallFlowNetwork build_flow_network(const std::vector<Ad>& narrow_ads,
                                    const CapacityVector& caps,
                                    const Rational& epsilon, int slot_count,
                                    const FlowOptions& options = {});

/// Ad-to-type mass, keyed (ad id, type), positive entries only.
struct FlowAssignment {
  std::map<std::pair<int, TypeMask>, Rational> flow;

  Rational value() const;
  std::vector<TypeMask> support(int ad_id) const;  // ascending masks
};

/// Maximum fractional assignment for the network.
FlowAssignment max_flow(const SmallFlowNetwork& network);

/// Snaps a fractional assignment to all-or-nothing: ads are grouped by
/// support, groups processed in increasing support-set order, and within a
/// group each type greedily absorbs whole ads (by id) while the assigned
/// mass stays within the group's fractional mass on that type. Unplaced ads
/// are dropped; each group loses less mass than one of its ads carries.
FlowAssignment rounding(const FlowAssignment& fractional,
                        const std::vector<Ad>& narrow_ads);

struct SolveSmallResult {
  Schedule fragment;  // narrow ads only, K slots
  Rational value;
  FlowAssignment fractional;
  FlowAssignment integral;
};

/// Network + max flow + rounding + materialization in one step.
SolveSmallResult solve_small(const std::vector<Ad>& narrow_ads,
                             const CapacityVector& caps,
                             const Rational& epsilon, int slot_count,
                             const FlowOptions& options = {});

struct PtasOptions {
  Rational eps_prime = Rational(1, 2);
  std::uint64_t budget = 1'000'000;
  /// Test hook: bypass the eps_prime -> internal epsilon reduction.
  std::optional<Rational> internal_eps_override;
  FlowOptions flow;
};

struct PtasResult {
  Schedule schedule;
  Rational value;
  Rational internal_eps;
  bool first_fit_complete = false;
  /// The enumeration budget ran out: `schedule` is the best candidate seen
  /// and still feasible, but the approximation guarantee no longer holds.
  bool guarantee_void = false;
  std::uint64_t configurations = 0;
  std::uint64_t capacity_vectors = 0;
};

/// Scheme driver: returns the first-fit solution outright when it schedules
/// everything; otherwise derives the internal epsilon from eps_prime
/// (eps_prime / (6 * 2^K * K), snapped down to a unit fraction), splits ads
/// at the width threshold, and takes the best of first-fit and every
/// configuration x compatible capacity vector combined with the rounded
/// fractional packing of the narrow ads. Intended for small, fixed K.
PtasResult ptas(const Instance& instance, const PtasOptions& options = {});

}  // namespace adspace
