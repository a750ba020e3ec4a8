#include <doctest.h>

#include <map>
#include <set>

#include "adspace/brute_force.hpp"
#include "adspace/errors.hpp"
#include "adspace/greedy.hpp"
#include "adspace/ptas.hpp"
#include "adspace/schedule.hpp"
#include "testkit.hpp"

using namespace adspace;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

Instance narrow_fixture(std::uint64_t seed, int ad_count, int slot_count,
                        long max_num, long denom) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.slot_count = slot_count;
  inst.variant = Variant::MaxSpaceRD;
  for (int i = 0; i < ad_count; ++i) {
    int release = (int)testkit::draw(rng, 1, slot_count);
    int deadline = (int)testkit::draw(rng, release, slot_count);
    int frequency = (int)testkit::draw(rng, 1, deadline - release + 1);
    inst.ads.push_back(testkit::ad(i,
                                   frac(testkit::draw(rng, 1, max_num), denom),
                                   frequency, release, deadline));
  }
  return inst;
}

CapacityVector random_unit_compatible_caps(std::mt19937_64& rng,
                                           const Rational& eps,
                                           int slot_count) {
  const int type_count = 1 << slot_count;
  const long top = (long)adspace::rational_ceil(Rational(1) / eps);
  CapacityVector caps;
  caps.count.resize(type_count);
  while (true) {
    for (int t = 0; t < type_count; ++t) {
      caps.count[t] = (int)testkit::draw(rng, 0, top);
    }
    bool fits = true;
    for (int j = 1; j <= slot_count && fits; ++j) {
      Rational sum = 0;
      for (int t = 0; t < type_count; ++t) {
        if (type_contains((TypeMask)t, j)) sum += Rational(caps.count[t]) * eps;
      }
      fits = sum <= 1;
    }
    if (fits) return caps;
  }
}

}  // namespace

TEST_SUITE("ptas") {

TEST_CASE("type mask helpers") {
  CHECK(type_cardinality(0b101) == 2);
  CHECK(type_cardinality(0) == 0);
  CHECK(type_contains(0b101, 1));
  CHECK(!type_contains(0b101, 2));
  CHECK(type_contains(0b101, 3));
  CHECK(type_slots(0b101, 3) == std::vector<int>{1, 3});
  CHECK(type_slots(0, 3).empty());

  Ad wide = testkit::ad(0, frac(3, 5), 2, 1, 3);
  CHECK(type_compatible(wide, 0b011));
  CHECK(type_compatible(wide, 0b101));
  CHECK(type_compatible(wide, 0b110));
  CHECK(!type_compatible(wide, 0b001));  // cardinality 1 != frequency
  CHECK(!type_compatible(wide, 0b111));

  Ad late = testkit::ad(1, frac(3, 5), 1, 2, 3);
  CHECK(!type_compatible(late, 0b001));  // slot 1 before the release
  CHECK(type_compatible(late, 0b010));
  CHECK(type_compatible(late, 0b100));
}

TEST_CASE("configuration enumeration counts") {
  CHECK(enumerate_configurations({}, 2, 1000).size() == 1);

  std::vector<Ad> one = {testkit::ad(0, Rational(1), 1, 1, 1)};
  CHECK(enumerate_configurations(one, 1, 1000).size() == 2);

  std::vector<Ad> window = {testkit::ad(0, Rational(1), 1, 1, 2)};
  std::vector<Configuration> three = enumerate_configurations(window, 2, 1000);
  REQUIRE(three.size() == 3);
  CHECK(three[0].placements.empty());
  REQUIRE(three[1].placements.size() == 1);
  CHECK(three[1].placements[0] == std::pair<int, TypeMask>{0, 1});
  REQUIRE(three[2].placements.size() == 1);
  CHECK(three[2].placements[0] == std::pair<int, TypeMask>{0, 2});
}

TEST_CASE("configuration enumeration prunes overfull slots") {
  std::vector<Ad> pair = {testkit::ad(0, frac(3, 5), 1, 1, 1),
                          testkit::ad(1, frac(3, 5), 1, 1, 1)};
  std::vector<Configuration> configs = enumerate_configurations(pair, 1, 1000);
  CHECK(configs.size() == 3);  // both together would overflow slot 1
  for (const Configuration& c : configs) {
    CHECK(c.placements.size() <= 1);
  }
}

TEST_CASE("configuration enumeration respects its budget") {
  std::vector<Ad> window = {testkit::ad(0, Rational(1), 1, 1, 2)};
  CHECK_THROWS_AS(enumerate_configurations(window, 2, 2),
                  BudgetExceededError);
}

TEST_CASE("configurations carry consistent loads and no duplicates") {
  std::vector<Ad> ads = {testkit::ad(0, frac(2, 3), 2, 1, 3),
                         testkit::ad(1, frac(3, 4), 1, 2, 3),
                         testkit::ad(2, frac(9, 10), 1, 1, 2)};
  std::vector<Configuration> configs = enumerate_configurations(ads, 3, 10000);
  std::set<std::vector<std::pair<int, TypeMask>>> seen;
  for (const Configuration& config : configs) {
    CHECK(seen.insert(config.placements).second);
    std::vector<Rational> load(3, 0);
    for (const auto& [id, type] : config.placements) {
      CHECK(type_compatible(ads[id], type));
      for (int j : type_slots(type, 3)) load[j - 1] += ads[id].size;
    }
    REQUIRE(config.slot_load.size() == 3);
    for (int j = 0; j < 3; ++j) {
      CHECK(config.slot_load[j] == load[j]);
      CHECK(config.slot_load[j] <= 1);
    }
  }
}

TEST_CASE("configuration schedules place every copy") {
  Configuration config;
  config.placements = {{0, 0b11}};
  config.slot_load = {frac(2, 3), frac(2, 3)};
  Schedule s = configuration_schedule(config, 2);
  CHECK(s.slots[0] == std::vector<int>{0});
  CHECK(s.slots[1] == std::vector<int>{0});
}

TEST_CASE("residual capacities complement the load") {
  Configuration empty;
  empty.slot_load = {0, 0, 0};
  CHECK(residual_capacities(empty) ==
        std::vector<Rational>{1, 1, 1});

  Configuration mixed;
  mixed.slot_load = {frac(3, 5), 0, Rational(1)};
  std::vector<Rational> u = residual_capacities(mixed);
  CHECK(u == std::vector<Rational>{frac(2, 5), 1, 0});
}

TEST_CASE("capacity vector enumeration over a free slot") {
  std::vector<CapacityVector> vectors =
      enumerate_capacity_vectors({Rational(1)}, frac(1, 2), 1000);
  REQUIRE(vectors.size() == 9);
  CHECK(vectors.front().count == std::vector<int>{0, 0});
  CHECK(vectors[1].count == std::vector<int>{0, 1});
  CHECK(vectors[2].count == std::vector<int>{0, 2});
  CHECK(vectors[3].count == std::vector<int>{1, 0});
  CHECK(vectors.back().count == std::vector<int>{2, 2});
}

TEST_CASE("capacity vector enumeration with nothing free") {
  std::vector<CapacityVector> vectors =
      enumerate_capacity_vectors({Rational(0)}, frac(1, 2), 1000);
  REQUIRE(vectors.size() == 3);  // only the slotless type stays free
  for (const CapacityVector& v : vectors) {
    CHECK(v.count[1] == 0);
  }
}

TEST_CASE("capacity vectors respect per-slot residuals") {
  std::vector<Rational> residual = {frac(2, 5), frac(3, 4)};
  Rational eps = frac(1, 3);
  std::vector<CapacityVector> vectors =
      enumerate_capacity_vectors(residual, eps, 100000);
  CHECK(!vectors.empty());
  for (const CapacityVector& v : vectors) {
    for (int j = 1; j <= 2; ++j) {
      Rational sum = 0;
      for (int t = 0; t < 4; ++t) {
        if (type_contains((TypeMask)t, j)) sum += Rational(v.count[t]) * eps;
      }
      CHECK(sum <= residual[j - 1]);
    }
  }
}

TEST_CASE("capacity vector enumeration pins unusable types") {
  Budget budget(1000);
  std::vector<CapacityVector> vectors;
  for_each_capacity_vector(
      {Rational(1)}, frac(1, 2), {0, 0}, budget,
      [&](const CapacityVector& v) { vectors.push_back(v); });
  REQUIRE(vectors.size() == 1);
  CHECK(vectors[0].count == std::vector<int>{0, 0});

  Budget more(1000);
  vectors.clear();
  for_each_capacity_vector(
      {Rational(1)}, frac(1, 2), {1, 0}, more,
      [&](const CapacityVector& v) { vectors.push_back(v); });
  CHECK(vectors.size() == 3);
}

TEST_CASE("capacity vector enumeration rejects a non-unit epsilon") {
  CHECK_THROWS_AS(enumerate_capacity_vectors({Rational(1)}, frac(2, 5), 100),
                  ValidationError);
}

TEST_CASE("capacity vector enumeration respects its budget") {
  CHECK_THROWS_AS(enumerate_capacity_vectors({Rational(1)}, frac(1, 2), 4),
                  BudgetExceededError);
}

TEST_CASE("packing network shape") {
  Instance inst = testkit::instance(
      2, Variant::MaxSpaceRD,
      {{frac(1, 100), 1, 1, 2}, {frac(1, 50), 2, 1, 2}});
  CapacityVector caps;
  caps.count = {0, 1, 1, 2};
  SmallFlowNetwork net = build_flow_network(inst.ads, caps, frac(1, 2), 2);
  CHECK(net.network.node_count == 2 + 2 + 4);
  CHECK(net.slot_count == 2);
  CHECK(net.ad_ids == std::vector<int>{0, 1});

  int source_edges = 0, sink_edges = 0, labeled = 0;
  Rational unbounded = 1 + frac(1, 100) + frac(1, 50) * 2;
  for (std::size_t i = 0; i < net.network.edges.size(); ++i) {
    const FlowEdge& edge = net.network.edges[i];
    if (edge.from == net.network.source) {
      ++source_edges;
      CHECK(!net.edge_labels[i].has_value());
    } else if (edge.to == net.network.sink) {
      ++sink_edges;
      CHECK(!net.edge_labels[i].has_value());
    } else {
      ++labeled;
      REQUIRE(net.edge_labels[i].has_value());
      CHECK(edge.capacity == unbounded);
      auto [id, type] = *net.edge_labels[i];
      CHECK(type_compatible(inst.ads[id], type));
    }
  }
  CHECK(source_edges == 2);
  CHECK(sink_edges == 4);
  CHECK(labeled == 2 + 1);  // ad 0: types {1},{2}; ad 1: type {1,2}
}

TEST_CASE("rounding keeps an already integral flow") {
  Instance inst =
      testkit::instance(2, Variant::MaxSpaceRD, {{frac(1, 100), 2, 1, 2}});
  FlowAssignment integral;
  integral.flow[{0, 0b11}] = frac(1, 50);
  FlowAssignment rounded = rounding(integral, inst.ads);
  CHECK(rounded.flow == integral.flow);
  CHECK(rounded.value() == frac(1, 50));
}

TEST_CASE("rounding drops an ad split too thin") {
  Instance inst =
      testkit::instance(2, Variant::MaxSpaceRD, {{frac(1, 300), 1, 1, 2}});
  FlowAssignment split;
  split.flow[{0, 0b01}] = frac(1, 600);
  split.flow[{0, 0b10}] = frac(1, 600);
  FlowAssignment rounded = rounding(split, inst.ads);
  CHECK(rounded.flow.empty());
  CHECK(split.value() - rounded.value() == frac(1, 300));
}

TEST_CASE("rounding keeps whole ads that fit the group mass") {
  Instance inst = testkit::instance(
      1, Variant::MaxSpaceRD,
      {{frac(1, 10), 1, 1, 1}, {frac(1, 600), 1, 1, 1}});
  FlowAssignment fractional;
  fractional.flow[{0, 1}] = frac(1, 10);
  fractional.flow[{1, 1}] = frac(1, 1200);
  FlowAssignment rounded = rounding(fractional, inst.ads);
  REQUIRE(rounded.flow.size() == 1);
  CHECK(rounded.flow.at({0, 1}) == frac(1, 10));
}

TEST_CASE("rounding flags a flow entry without a matching ad") {
  FlowAssignment orphan;
  orphan.flow[{5, 1}] = frac(1, 10);
  CHECK_THROWS_AS(rounding(orphan, {}), UnknownAdError);
}

TEST_CASE("rounding loses at most one narrow ad per support type") {
  // Sizes below the width threshold for eps = 1/2, K = 2 (1/256).
  const Rational eps = frac(1, 2);
  const Rational per_type_bound = eps / 64;  // eps / (2^(2^K) * 2^K)
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    Instance inst = narrow_fixture(seed, 6, 2, 3, 1000);
    CapacityVector caps = random_unit_compatible_caps(rng, eps, 2);
    SolveSmallResult run = solve_small(inst.ads, caps, eps, 2);

    CHECK(run.integral.value() >= run.fractional.value() - eps);

    std::map<std::vector<TypeMask>, Rational> group_frac, group_int;
    std::map<std::vector<TypeMask>, int> group_size;
    for (const Ad& ad : inst.ads) {
      std::vector<TypeMask> support = run.fractional.support(ad.id);
      if (support.empty()) continue;
      Rational in_frac = 0, in_int = 0;
      for (TypeMask t : support) {
        auto f = run.fractional.flow.find({ad.id, t});
        if (f != run.fractional.flow.end()) in_frac += f->second;
        auto g = run.integral.flow.find({ad.id, t});
        if (g != run.integral.flow.end()) in_int += g->second;
      }
      group_frac[support] += in_frac;
      group_int[support] += in_int;
      group_size[support] = (int)support.size();
    }
    for (const auto& [support, mass] : group_frac) {
      CHECK(group_int[support] >=
            mass - Rational(group_size[support]) * per_type_bound);
    }
  }
}

TEST_CASE("solve_small with nothing to place") {
  CapacityVector caps;
  caps.count = {2, 2, 2, 2};
  SolveSmallResult empty = solve_small({}, caps, frac(1, 2), 2);
  CHECK(empty.value == 0);
  CHECK(empty.fragment.slot_count() == 2);

  Instance inst =
      testkit::instance(2, Variant::MaxSpaceRD, {{frac(1, 100), 1, 1, 2}});
  CapacityVector zero;
  zero.count = {0, 0, 0, 0};
  SolveSmallResult blocked = solve_small(inst.ads, zero, frac(1, 2), 2);
  CHECK(blocked.value == 0);
  for (const auto& slot : blocked.fragment.slots) CHECK(slot.empty());
}

TEST_CASE("solve_small lands within epsilon of the packing optimum") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 rng(seed * 3 + 1);
    Rational eps = (seed % 2 == 0) ? frac(1, 2) : frac(1, 3);
    Instance inst = narrow_fixture(seed, 5, 2, 3, 1000);
    CapacityVector caps = random_unit_compatible_caps(rng, eps, 2);

    SolveSmallResult run = solve_small(inst.ads, caps, eps, 2);

    std::vector<Rational> type_cap;
    for (int t = 0; t < 4; ++t) {
      type_cap.push_back(Rational(caps.count[t]) * eps);
    }
    Rational opt = testkit::small_opt(inst.ads, type_cap, 2);
    CHECK(run.value <= opt);
    CHECK(run.value >= opt - eps);
    CHECK(run.value == total_fullness(inst, run.fragment));

    // Each type's occupation stays within its cap.
    std::map<TypeMask, Rational> occupation;
    for (const auto& [key, amount] : run.integral.flow) {
      occupation[key.second] += inst.ads[key.first].size;
    }
    for (const auto& [t, used] : occupation) {
      CHECK(used <= type_cap[t]);
    }
  }
}

TEST_CASE("scheme returns a complete first fit unchanged") {
  Instance inst = testkit::instance(
      2, Variant::MaxSpaceRD,
      {{frac(1, 5), 1, 1, 2}, {frac(1, 10), 2, 1, 2}});
  PtasResult result = ptas(inst);
  CHECK(result.first_fit_complete);
  CHECK(result.value == frac(1, 5) + frac(1, 5));
  FirstFitResult baseline = first_fit(inst);
  CHECK(result.schedule.slots == baseline.schedule.slots);
  CHECK(result.configurations == 0);
}

TEST_CASE("scheme matches the oracle when every ad is wide") {
  Instance inst = testkit::instance(2, Variant::MaxSpaceRD,
                                    {{frac(3, 5), 1, 1, 2},
                                     {frac(7, 10), 1, 1, 2},
                                     {frac(4, 5), 2, 1, 2}});
  PtasOptions options;
  options.internal_eps_override = frac(1, 2);
  PtasResult result = ptas(inst, options);
  CHECK(!result.first_fit_complete);
  CHECK(result.value == frac(8, 5));
  CHECK(result.value == brute_force(inst).value);
  CHECK(verify(inst, result.schedule).feasible());
  CHECK(!result.guarantee_void);
}

TEST_CASE("scheme reports the snapped internal accuracy and counters") {
  Instance inst = testkit::instance(
      1, Variant::MaxSpaceRD, {{frac(3, 5), 1, 1, 1}, {frac(3, 5), 1, 1, 1}});
  PtasOptions options;
  options.eps_prime = frac(2, 3);
  PtasResult result = ptas(inst, options);
  CHECK(result.internal_eps == frac(1, 18));
  CHECK(result.configurations == 3);
  CHECK(result.capacity_vectors == 3);  // one all-zero vector per config
  CHECK(result.value == frac(3, 5));

  PtasOptions odd;
  odd.eps_prime = frac(5, 7);
  CHECK(ptas(inst, odd).internal_eps == frac(1, 17));
}

TEST_CASE("scheme beats or ties its seed candidates") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Instance inst = narrow_fixture(seed, 5, 2, 400, 1000);
    PtasOptions options;
    options.internal_eps_override = frac(1, 2);
    options.budget = 500000;
    PtasResult result = ptas(inst, options);
    REQUIRE(verify(inst, result.schedule).feasible());
    CHECK(!result.guarantee_void);
    FirstFitResult baseline = first_fit(inst);
    CHECK(result.value >= total_fullness(inst, baseline.schedule));
    CHECK(result.value == total_fullness(inst, result.schedule));
    CHECK(result.value <= brute_force(inst).value);
  }
}

TEST_CASE("scheme survives running out of budget") {
  Instance inst = testkit::instance(2, Variant::MaxSpaceRD,
                                    {{frac(3, 5), 1, 1, 2},
                                     {frac(7, 10), 1, 1, 2},
                                     {frac(4, 5), 2, 1, 2}});
  PtasOptions options;
  options.internal_eps_override = frac(1, 2);
  options.budget = 3;
  PtasResult result = ptas(inst, options);
  CHECK(result.guarantee_void);
  CHECK(verify(inst, result.schedule).feasible());
  // The first-fit seed is never lost.
  FirstFitResult baseline = first_fit(inst);
  CHECK(result.value >= total_fullness(inst, baseline.schedule));
}

TEST_CASE("scheme rejects a non-positive accuracy") {
  Instance inst =
      testkit::instance(1, Variant::MaxSpaceRD, {{frac(3, 5), 1, 1, 1}});
  PtasOptions options;
  options.eps_prime = Rational(0);
  CHECK_THROWS_AS(ptas(inst, options), ValidationError);
}

}
