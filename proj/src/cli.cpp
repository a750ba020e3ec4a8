#include "adspace/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "adspace/bench.hpp"
#include "adspace/brute_force.hpp"
#include "adspace/dp_large.hpp"
#include "adspace/errors.hpp"
#include "adspace/generate.hpp"
#include "adspace/greedy.hpp"
#include "adspace/io.hpp"
#include "adspace/ptas.hpp"

namespace adspace {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Variant parse_variant(const std::string& name) {
  auto variant = variant_from_name(name);
  if (!variant) {
    throw std::invalid_argument("unknown variant \"" + name + "\"");
  }
  return *variant;
}

SizeDistribution parse_distribution(const std::string& name) {
  if (name == "uniform") return SizeDistribution::Uniform;
  if (name == "thirds-mix") return SizeDistribution::ThirdsMix;
  if (name == "ptas-small") return SizeDistribution::PtasSmall;
  throw std::invalid_argument("unknown distribution \"" + name + "\"");
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(
    const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("seed range must look like 1..200, got \"" +
                                text + "\"");
  }
  std::uint64_t begin = 0, end = 0;
  try {
    begin = std::stoull(text.substr(0, dots));
    end = std::stoull(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("seed range must look like 1..200, got \"" +
                                text + "\"");
  }
  if (begin > end) {
    throw std::invalid_argument("empty seed range \"" + text + "\"");
  }
  return {begin, end};
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ADSPACE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "ADSPACE_BUDGET must be a nonnegative integer, got \"" +
          std::string(env) + "\"");
    }
  }
  return 1'000'000;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write \"" + path + "\"");
  file << content;
}

struct SolveArgs {
  std::string input;
  std::string algorithm;
  std::string eps_prime = "1/2";
  std::string internal_eps;
  std::uint64_t budget = 0;
  bool budget_set = false;
  bool sink_no_eps = false;
  bool dp_deadline_extension = false;
  int max_ads = 9;
  std::uint64_t max_states = 100'000'000;
};

int do_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Instance instance = parse_instance(read_file(args.input));
  std::uint64_t budget = args.budget_set ? args.budget : default_budget();

  Schedule schedule;
  bool guarantee_void = false;
  if (args.algorithm == "exact") {
    OracleLimits limits;
    limits.max_ads = args.max_ads;
    limits.max_states = args.max_states;
    schedule = brute_force(instance, limits).schedule;
  } else if (args.algorithm == "dp-large") {
    DpOptions options;
    options.allow_deadlines = args.dp_deadline_extension;
    schedule = dp_large(instance.ads, instance.slot_count, options).schedule;
  } else if (args.algorithm == "medium") {
    schedule = schedule_medium(instance.ads, instance.slot_count).schedule;
  } else if (args.algorithm == "small") {
    schedule = schedule_small(instance.ads, instance.slot_count).schedule;
  } else if (args.algorithm == "combined") {
    schedule = combined(instance);
  } else if (args.algorithm == "first-fit") {
    schedule = first_fit(instance).schedule;
  } else {
    PtasOptions options;
    options.eps_prime = parse_rational(args.eps_prime);
    options.budget = budget;
    options.flow.sink_capacity_no_eps = args.sink_no_eps;
    if (!args.internal_eps.empty()) {
      options.internal_eps_override = parse_rational(args.internal_eps);
    }
    PtasResult result = ptas(instance, options);
    err << "ptas: internal epsilon " << to_string(result.internal_eps)
        << ", configurations " << result.configurations
        << ", capacity vectors " << result.capacity_vectors << "\n";
    schedule = std::move(result.schedule);
    guarantee_void = result.guarantee_void;
  }

  // Tripwire: no schedule leaves this process unchecked.
  FeasibilityReport report = verify(instance, schedule);
  if (!report.feasible()) {
    for (const Violation& v : report.violations) {
      err << violation_kind_name(v.kind) << ": " << v.detail << "\n";
    }
    err << "internal error: solver produced an infeasible schedule\n";
    return 1;
  }

  out << format_schedule(instance, schedule);
  if (guarantee_void) {
    err << "warning: enumeration budget exceeded; reporting the best "
           "feasible candidate, approximation guarantee void\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"slot scheduling for banner ads", "adspace"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "schedule an instance file");
  solve->add_option("input", solve_args.input, "instance file")->required();
  solve
      ->add_option("--algorithm", solve_args.algorithm,
                   "exact, dp-large, medium, small, combined, first-fit or "
                   "ptas")
      ->required()
      ->check(CLI::IsMember({"exact", "dp-large", "medium", "small",
                             "combined", "first-fit", "ptas"}));
  solve->add_option("--eps-prime", solve_args.eps_prime,
                    "ptas: target accuracy (rational)");
  solve->add_option("--internal-eps", solve_args.internal_eps,
                    "ptas: bypass the accuracy reduction (testing)");
  auto* budget_opt = solve->add_option(
      "--budget", solve_args.budget,
      "ptas: enumeration budget (default ADSPACE_BUDGET or 1000000)");
  solve->add_flag("--sink-capacity-no-eps", solve_args.sink_no_eps,
                  "ptas: unscaled type->sink capacities (comparison only; "
                  "the output may fail verification)");
  solve->add_flag("--dp-deadline-extension", solve_args.dp_deadline_extension,
                  "dp-large: accept deadlines before K (heuristic)");
  solve->add_option("--max-ads", solve_args.max_ads, "exact: ad limit");
  solve->add_option("--max-states", solve_args.max_states,
                    "exact: search node limit");

  std::string verify_instance_path, verify_schedule_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a schedule against an instance");
  verify_cmd->add_option("instance", verify_instance_path, "instance file")
      ->required();
  verify_cmd->add_option("schedule", verify_schedule_path, "schedule file")
      ->required();

  int gen_n = 6, gen_k = 4;
  std::string gen_variant = "maxspace-r", gen_dist = "uniform";
  std::string gen_eps = "1/2", gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_n, "ad count");
  gen->add_option("--K", gen_k, "slot count");
  gen->add_option("--variant", gen_variant,
                  "maxspace, maxspace-r or maxspace-rd");
  gen->add_option("--dist", gen_dist, "uniform, thirds-mix or ptas-small");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--eps", gen_eps, "ptas-small: accuracy for the threshold");
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  std::string bench_suite = "ratios", bench_seeds = "1..200", bench_out;
  int bench_n = 6, bench_k = 4;
  std::string bench_variant = "maxspace-r", bench_dist = "thirds-mix";
  int bench_max_ads = 9;
  std::uint64_t bench_max_states = 100'000'000;
  CLI::App* bench =
      app.add_subcommand("bench", "compare algorithms over seeded instances");
  bench->add_option("--suite", bench_suite, "suite name (ratios)")
      ->check(CLI::IsMember({"ratios"}));
  bench->add_option("--seeds", bench_seeds, "seed range, e.g. 1..200");
  bench->add_option("--n", bench_n, "ad count");
  bench->add_option("--K", bench_k, "slot count");
  bench->add_option("--variant", bench_variant, "maxspace or maxspace-r");
  bench->add_option("--dist", bench_dist, "size distribution");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_option("--max-ads", bench_max_ads, "oracle ad limit");
  bench->add_option("--max-states", bench_max_states,
                    "oracle search node limit");

  std::vector<const char*> argv;
  argv.push_back("adspace");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
    solve_args.budget_set = budget_opt->count() > 0;

    if (solve->parsed()) return do_solve(solve_args, out, err);

    if (verify_cmd->parsed()) {
      Instance instance = parse_instance(read_file(verify_instance_path));
      Schedule schedule =
          parse_schedule(read_file(verify_schedule_path), instance);
      FeasibilityReport report = verify(instance, schedule);
      for (const Violation& v : report.violations) {
        out << violation_kind_name(v.kind) << ": " << v.detail << "\n";
      }
      if (!report.feasible()) {
        out << "infeasible (" << report.violations.size() << " violation"
            << (report.violations.size() == 1 ? "" : "s") << ")\n";
        return 1;
      }
      out << "feasible, value "
          << to_string(total_fullness(instance, schedule)) << "\n";
      return 0;
    }

    if (gen->parsed()) {
      GenerateParams params;
      params.ad_count = gen_n;
      params.slot_count = gen_k;
      params.variant = parse_variant(gen_variant);
      params.distribution = parse_distribution(gen_dist);
      params.seed = gen_seed;
      params.ptas_epsilon = parse_rational(gen_eps);
      write_output(gen_out, serialize_instance(generate(params)), out);
      return 0;
    }

    if (bench->parsed()) {
      BenchParams params;
      std::tie(params.seed_begin, params.seed_end) =
          parse_seed_range(bench_seeds);
      params.ad_count = bench_n;
      params.slot_count = bench_k;
      params.variant = parse_variant(bench_variant);
      params.distribution = parse_distribution(bench_dist);
      params.limits.max_ads = bench_max_ads;
      params.limits.max_states = bench_max_states;
      std::ostringstream csv;
      csv << bench_csv_header() << "\n";
      for (const BenchRecord& record : run_ratio_suite(params)) {
        csv << bench_record_csv(record) << "\n";
      }
      write_output(bench_out, csv.str(), out);
      return 0;
    }

    err << "error: no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const OverflowGuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ClassViolationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const UnknownAdError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace adspace
