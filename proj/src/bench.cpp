#include "adspace/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "adspace/errors.hpp"
#include "adspace/greedy.hpp"
#include "adspace/schedule.hpp"

namespace adspace {

namespace {

template <typename Fn>
std::pair<Schedule, double> timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  Schedule schedule = fn();
  std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  return {std::move(schedule), elapsed.count()};
}

}  // namespace

std::vector<BenchRecord> run_ratio_suite(const BenchParams& params) {
  if (params.variant == Variant::MaxSpaceRD) {
    throw ValidationError(-1, "variant",
                          "the ratio suite compares full-horizon algorithms; "
                          "use maxspace or maxspace-r");
  }

  std::vector<BenchRecord> records;
  for (std::uint64_t seed = params.seed_begin; seed <= params.seed_end;
       ++seed) {
    GenerateParams gen;
    gen.ad_count = params.ad_count;
    gen.slot_count = params.slot_count;
    gen.variant = params.variant;
    gen.distribution = params.distribution;
    gen.seed = seed;
    Instance instance = generate(gen);

    std::string dist = gen.distribution == SizeDistribution::Uniform
                           ? "uniform"
                           : gen.distribution == SizeDistribution::ThirdsMix
                                 ? "thirds-mix"
                                 : "ptas-small";
    std::string instance_id = dist + "-n" + std::to_string(gen.ad_count) +
                              "-K" + std::to_string(gen.slot_count) + "-s" +
                              std::to_string(seed);

    std::optional<Rational> oracle;
    std::optional<std::pair<Schedule, double>> oracle_run;
    if ((int)instance.ads.size() <= params.limits.max_ads) {
      try {
        auto start = std::chrono::steady_clock::now();
        BruteForceResult exact = brute_force(instance, params.limits);
        std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        oracle = exact.value;
        oracle_run = {std::move(exact.schedule), elapsed.count()};
      } catch (const BudgetExceededError&) {
        // Leave the oracle column empty rather than report a partial answer.
      }
    }

    auto emit = [&](const std::string& algorithm, Schedule schedule,
                    double ms) {
      BenchRecord record;
      record.instance_id = instance_id;
      record.seed = seed;
      record.ad_count = gen.ad_count;
      record.slot_count = gen.slot_count;
      record.variant = gen.variant;
      record.algorithm = algorithm;
      record.value = total_fullness(instance, schedule);
      record.oracle = oracle;
      record.runtime_ms = ms;
      record.feasible = verify(instance, schedule).feasible();
      records.push_back(std::move(record));
    };

    if (oracle_run) {
      emit("exact", std::move(oracle_run->first), oracle_run->second);
    }
    auto [combined_schedule, combined_ms] =
        timed([&] { return combined(instance); });
    emit("combined", std::move(combined_schedule), combined_ms);
    auto [ff_schedule, ff_ms] =
        timed([&] { return first_fit(instance).schedule; });
    emit("first-fit", std::move(ff_schedule), ff_ms);
  }
  return records;
}

std::string bench_csv_header() {
  return "instance_id,seed,n,K,variant,algorithm,value,value_dec,oracle,"
         "ratio,runtime_ms,feasible";
}

std::string bench_record_csv(const BenchRecord& record) {
  std::ostringstream out;
  out << record.instance_id << ',' << record.seed << ',' << record.ad_count
      << ',' << record.slot_count << ',' << variant_name(record.variant)
      << ',' << record.algorithm << ',' << to_string(record.value) << ','
      << to_decimal_string(record.value);
  if (record.oracle) {
    out << ',' << to_string(*record.oracle) << ',';
    if (*record.oracle == 0) {
      out << (record.value == 0 ? "1.000000" : "n/a");
    } else {
      out << to_decimal_string(record.value / *record.oracle);
    }
  } else {
    out << ",n/a,n/a";
  }
  char ms[32];
  std::snprintf(ms, sizeof(ms), "%.3f", record.runtime_ms);
  out << ',' << ms << ',' << (record.feasible ? "true" : "false");
  return out.str();
}

}  // namespace adspace
