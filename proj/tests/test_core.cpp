#include <doctest.h>

#include <algorithm>
#include <set>

#include "adspace/classify.hpp"
#include "adspace/errors.hpp"
#include "adspace/instance.hpp"
#include "adspace/schedule.hpp"
#include "testkit.hpp"

using namespace adspace;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

bool has_violation(const FeasibilityReport& report, ViolationKind kind,
                   int index) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) {
                       return v.kind == kind && v.index == index;
                     });
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("variant names round-trip") {
  for (Variant v :
       {Variant::MaxSpace, Variant::MaxSpaceR, Variant::MaxSpaceRD}) {
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK(!variant_from_name("maxspace-x").has_value());
  CHECK(variant_name(Variant::MaxSpaceR) == "maxspace-r");
}

TEST_CASE("validate_instance accepts a well-formed instance") {
  Instance inst = testkit::instance(3, Variant::MaxSpaceRD,
                                    {{frac(1, 3), 2, 1, 2}, {1, 1, 3, 3}});
  CHECK_NOTHROW(validate_instance(inst));
}

TEST_CASE("validate_instance rejects broken fields") {
  auto base = [] {
    return testkit::instance(3, Variant::MaxSpaceRD, {{frac(1, 3), 2, 1, 2}});
  };

  Instance bad_k = base();
  bad_k.slot_count = 0;
  CHECK_THROWS_AS(validate_instance(bad_k), ValidationError);

  Instance bad_height = base();
  bad_height.slot_height = 0;
  CHECK_THROWS_AS(validate_instance(bad_height), ValidationError);

  Instance bad_id = base();
  bad_id.ads[0].id = 7;
  CHECK_THROWS_AS(validate_instance(bad_id), ValidationError);

  Instance zero_size = base();
  zero_size.ads[0].size = 0;
  CHECK_THROWS_AS(validate_instance(zero_size), ValidationError);

  Instance oversize = base();
  oversize.ads[0].size = frac(7, 5);
  CHECK_THROWS_AS(validate_instance(oversize), ValidationError);

  Instance wide_window = base();
  wide_window.ads[0].frequency = 3;  // w > d - r + 1
  CHECK_THROWS_AS(validate_instance(wide_window), ValidationError);

  Instance late_deadline = base();
  late_deadline.ads[0].deadline = 4;
  CHECK_THROWS_AS(validate_instance(late_deadline), ValidationError);

  Instance early_release = base();
  early_release.ads[0].release = 0;
  CHECK_THROWS_AS(validate_instance(early_release), ValidationError);

  Instance inverted = base();
  inverted.ads[0].release = 3;
  inverted.ads[0].deadline = 2;
  inverted.ads[0].frequency = 1;
  CHECK_THROWS_AS(validate_instance(inverted), ValidationError);
}

TEST_CASE("validation errors carry the ad id and constraint") {
  Instance inst = testkit::instance(3, Variant::MaxSpaceRD,
                                    {{frac(1, 3), 1, 1, 3}, {1, 3, 2, 3}});
  try {
    validate_instance(inst);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.ad_id == 1);
    CHECK(!e.constraint.empty());
  }
}

TEST_CASE("variant window rules") {
  Instance r_bad = testkit::instance(3, Variant::MaxSpaceR,
                                     {{frac(1, 3), 1, 1, 2}});  // d != K
  CHECK_THROWS_AS(validate_instance(r_bad), ValidationError);

  Instance plain_bad = testkit::instance(3, Variant::MaxSpace,
                                         {{frac(1, 3), 1, 2, 3}});  // r != 1
  CHECK_THROWS_AS(validate_instance(plain_bad), ValidationError);

  Instance r_ok =
      testkit::instance(3, Variant::MaxSpaceR, {{frac(1, 3), 1, 2, 3}});
  CHECK_NOTHROW(validate_instance(r_ok));
}

TEST_CASE("slot_fullness sums exactly") {
  Instance inst = testkit::r_instance(
      2, {{frac(1, 2), 1, 1}, {frac(1, 4), 1, 1}, {frac(3, 7), 1, 1},
          {frac(2, 7), 1, 1}, {frac(2, 7), 1, 1}});
  Schedule schedule(2);
  CHECK(slot_fullness(inst, schedule, 1) == 0);

  schedule.slots[0] = {0, 1};
  CHECK(slot_fullness(inst, schedule, 1) == frac(3, 4));

  schedule.slots[1] = {2, 3, 4};
  CHECK(slot_fullness(inst, schedule, 2) == 1);

  schedule.slots[1].push_back(99);
  CHECK_THROWS_AS(slot_fullness(inst, schedule, 2), UnknownAdError);
}

TEST_CASE("total_fullness adds the slots up") {
  Instance empty = testkit::r_instance(3, {});
  CHECK(total_fullness(empty, Schedule(3)) == 0);

  Instance two = testkit::r_instance(2, {{frac(1, 3), 2, 1}});
  Schedule both(2);
  both.slots[0] = {0};
  both.slots[1] = {0};
  CHECK(total_fullness(two, both) == frac(2, 3));

  Instance three =
      testkit::r_instance(3, {{frac(3, 5), 2, 1}, {frac(9, 10), 1, 1}});
  Schedule s(3);
  s.slots[0] = {0};
  s.slots[1] = {0};
  s.slots[2] = {1};
  CHECK(total_fullness(three, s) == frac(21, 10));
}

TEST_CASE("verify accepts the empty schedule") {
  Instance inst = testkit::r_instance(2, {{frac(1, 2), 1, 1}});
  CHECK(verify(inst, Schedule(2)).feasible());
}

TEST_CASE("verify flags every violation kind") {
  Instance inst = testkit::instance(
      3, Variant::MaxSpaceRD,
      {{frac(3, 5), 2, 1, 3}, {frac(3, 5), 1, 3, 3}, {frac(1, 5), 1, 1, 1}});

  Schedule frequency(3);
  frequency.slots[0] = {0};
  CHECK(has_violation(verify(inst, frequency), ViolationKind::Frequency, 0));

  Schedule release(3);
  release.slots[1] = {1};
  CHECK(has_violation(verify(inst, release), ViolationKind::Release, 1));

  Schedule deadline(3);
  deadline.slots[1] = {2};
  CHECK(has_violation(verify(inst, deadline), ViolationKind::Deadline, 2));

  Schedule capacity(3);
  capacity.slots[2] = {0, 1};
  capacity.slots[1] = {0};
  FeasibilityReport cap_report = verify(inst, capacity);
  CHECK(has_violation(cap_report, ViolationKind::Capacity, 3));

  Schedule duplicate(3);
  duplicate.slots[0] = {2, 2};
  CHECK(has_violation(verify(inst, duplicate), ViolationKind::Duplicate, 2));

  Schedule unknown(3);
  unknown.slots[0] = {9};
  CHECK(has_violation(verify(inst, unknown), ViolationKind::UnknownAd, 9));
}

TEST_CASE("verify reports all violations, not only the first") {
  Instance inst = testkit::instance(
      2, Variant::MaxSpaceRD, {{frac(3, 5), 1, 2, 2}, {frac(3, 5), 2, 1, 2}});
  Schedule s(2);
  s.slots[0] = {0, 1};  // release violation for 0, capacity blown, 1 once
  FeasibilityReport report = verify(inst, s);
  CHECK(report.violations.size() >= 3);
  CHECK(has_violation(report, ViolationKind::Release, 0));
  CHECK(has_violation(report, ViolationKind::Capacity, 1));
  CHECK(has_violation(report, ViolationKind::Frequency, 1));
}

TEST_CASE("feasible schedules match the per-ad accounting") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = testkit::random_windowed(seed, 5, 4);
    // Schedule each ad fully at its window start when capacity allows.
    Schedule s(4);
    std::vector<Rational> load(4, 0);
    Rational expected = 0;
    for (const Ad& a : inst.ads) {
      std::vector<int> picks;
      for (int j = a.release; j <= a.deadline; ++j) {
        bool taken = std::find(s.slots[j - 1].begin(), s.slots[j - 1].end(),
                               a.id) != s.slots[j - 1].end();
        if (!taken && load[j - 1] + a.size <= 1) picks.push_back(j);
        if ((int)picks.size() == a.frequency) break;
      }
      if ((int)picks.size() < a.frequency) continue;
      for (int j : picks) {
        s.slots[j - 1].push_back(a.id);
        load[j - 1] += a.size;
      }
      expected += a.size * a.frequency;
    }
    REQUIRE(verify(inst, s).feasible());
    CHECK(total_fullness(inst, s) == expected);
  }
}

TEST_CASE("classify_thirds boundaries") {
  Instance inst = testkit::r_instance(
      1, {{frac(1, 2), 1, 1}, {frac(1, 4), 1, 1}, {frac(51, 100), 1, 1}});
  ThirdsPartition parts = classify_thirds(inst.ads);
  REQUIRE(parts.medium.size() == 1);
  CHECK(parts.medium[0].id == 0);
  REQUIRE(parts.small.size() == 1);
  CHECK(parts.small[0].id == 1);
  REQUIRE(parts.large.size() == 1);
  CHECK(parts.large[0].id == 2);
}

TEST_CASE("classify_thirds partitions") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = testkit::random_windowed(seed, 8, 3);
    ThirdsPartition parts = classify_thirds(inst.ads);
    CHECK(parts.large.size() + parts.medium.size() + parts.small.size() ==
          inst.ads.size());
    std::set<int> seen;
    for (const auto* bucket : {&parts.large, &parts.medium, &parts.small}) {
      for (const Ad& a : *bucket) {
        CHECK(seen.insert(a.id).second);
        if (bucket == &parts.large) CHECK(a.size > frac(1, 2));
        if (bucket == &parts.medium) {
          CHECK(a.size > frac(1, 4));
          CHECK(a.size <= frac(1, 2));
        }
        if (bucket == &parts.small) CHECK(a.size <= frac(1, 4));
      }
    }
  }
}

TEST_CASE("ptas width threshold") {
  CHECK(ptas_threshold(frac(1, 2), 2) == frac(1, 256));
  CHECK(ptas_threshold(Rational(1), 1) == frac(1, 8));
  CHECK(ptas_threshold(frac(1, 3), 1) == frac(1, 24));
  CHECK_THROWS_AS(ptas_threshold(Rational(0), 2), ValidationError);
  CHECK_THROWS_AS(ptas_threshold(frac(-1, 2), 2), ValidationError);
  CHECK_THROWS_AS(ptas_threshold(frac(1, 2), 0), ValidationError);
  CHECK_THROWS_AS(ptas_threshold(frac(1, 2), 32), OverflowGuardError);
}

TEST_CASE("classify_ptas splits at the threshold, boundary wide") {
  Instance inst = testkit::instance(2, Variant::MaxSpaceRD,
                                    {{frac(1, 256), 1, 1, 2},
                                     {frac(1, 300), 1, 1, 2},
                                     {frac(1, 2), 1, 1, 2}});
  PtasPartition parts = classify_ptas(inst.ads, frac(1, 2), 2);
  REQUIRE(parts.large.size() == 2);
  CHECK(parts.large[0].id == 0);  // size exactly at the threshold
  CHECK(parts.large[1].id == 2);
  REQUIRE(parts.small.size() == 1);
  CHECK(parts.small[0].id == 1);

  PtasPartition one_slot = classify_ptas(inst.ads, Rational(1), 1);
  // threshold 1/8: 1/256 and 1/300 are below, 1/2 above
  CHECK(one_slot.large.size() == 1);
  CHECK(one_slot.small.size() == 2);
}

}
