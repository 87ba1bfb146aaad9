// Command-line front end: run repeated trials, compare algorithms, dump a
// single full trace with plot data, or list the benchmark suite.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asgf/harness.hpp"

namespace {

struct CommonArgs {
  std::string benchmark;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: use ASGF_WORKERS or 1
  std::string out_dir;
  std::string config_file;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_out) {
  cmd->add_option("--benchmark", args.benchmark, "benchmark id, e.g. sphere-10")
      ->required();
  cmd->add_option("--seed", args.seed, "base seed (trial k uses seed + k)");
  cmd->add_option("--workers", args.workers,
                  "worker threads (default: ASGF_WORKERS or 1)");
  auto* out = cmd->add_option("--out", args.out_dir, "output directory");
  if (need_out) out->required();
  cmd->add_option("--config", args.config_file,
                  "INI config file with [asgf]/[es]/[dgs] sections");
}

asgf::ExperimentPlan build_plan(const CommonArgs& args) {
  asgf::ExperimentPlan plan;
  plan.benchmark_id = args.benchmark;
  plan.base_seed = args.seed;
  plan.output_dir = args.out_dir;
  if (args.workers > 0) {
    plan.worker_count = args.workers;
    plan.worker_count_source = "flag";
  } else {
    plan.worker_count = asgf::default_worker_count(plan.worker_count_source);
  }
  if (!args.config_file.empty()) {
    asgf::apply_config(asgf::parse_config_file(args.config_file), plan.config);
  }
  return plan;
}

void print_summary(const asgf::SummaryRow& s) {
  std::ostringstream line;
  line << s.benchmark << " " << s.algorithm << ": success " << s.successes << "/"
       << s.trial_count;
  if (s.mean_iterations_on_success) {
    line << ", mean iterations " << asgf::format_double(*s.mean_iterations_on_success)
         << ", mean evaluations "
         << asgf::format_double(*s.mean_evaluations_on_success);
  }
  std::cout << line.str() << "\n";
}

int cmd_run(const CommonArgs& args, const std::string& algo, int trials,
            const std::string& parallel_mode) {
  asgf::ExperimentPlan plan = build_plan(args);
  plan.algorithm = asgf::algorithm_from_string(algo);
  plan.trial_count = trials;
  plan.parallel_trials = parallel_mode != "directions";
  const asgf::ExperimentResult result = asgf::run_experiment(plan);
  print_summary(result.summary);
  if (!plan.output_dir.empty()) {
    std::cout << "wrote " << (plan.output_dir / "summary.json").string() << "\n";
  }
  return 0;
}

int cmd_compare(const CommonArgs& args, const std::string& algos_csv, int trials,
                const std::string& external) {
  std::vector<asgf::ExperimentPlan> plans;
  std::stringstream ss(algos_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    asgf::ExperimentPlan plan = build_plan(args);
    plan.algorithm = asgf::algorithm_from_string(name);
    plan.trial_count = trials;
    if (!plan.output_dir.empty()) plan.output_dir /= name;
    plans.push_back(std::move(plan));
  }
  if (plans.empty()) throw std::invalid_argument("--algos is empty");

  std::optional<std::filesystem::path> external_path;
  if (!external.empty()) external_path = external;
  const asgf::ComparisonTable table = asgf::compare(plans, external_path);
  std::cout << table.to_text();
  if (!args.out_dir.empty()) {
    const std::filesystem::path base(args.out_dir);
    std::filesystem::create_directories(base);
    std::ofstream csv(base / "compare.csv");
    csv << table.to_csv();
    std::ofstream txt(base / "compare.txt");
    txt << table.to_text();
    std::cout << "wrote " << (base / "compare.csv").string() << "\n";
  }
  return 0;
}

int cmd_trace(const CommonArgs& args, const std::string& algo, bool svg) {
  asgf::ExperimentPlan plan = build_plan(args);
  plan.algorithm = asgf::algorithm_from_string(algo);
  plan.trial_count = 1;
  plan.parallel_trials = false;  // a single run parallelizes over directions
  const asgf::ExperimentResult result = asgf::run_experiment(plan);
  print_summary(result.summary);
  const asgf::TrialResult& trial = result.trials.front();
  if (trial.errored) {
    std::cerr << "trial failed: " << trial.error << "\n";
    return 1;
  }
  std::vector<std::vector<asgf::RunTrace>> traces = {trial.trace};
  asgf::emit_convergence_plot_data(traces, plan.output_dir, svg);
  std::cout << "best value " << asgf::format_double(trial.best_value) << " after "
            << trial.iterations << " iterations, " << trial.evaluations
            << " evaluations\n";
  return 0;
}

int cmd_list_benchmarks() {
  std::printf("%-15s %-10s %-22s %s\n", "name", "dimension", "domain",
              "global minimum");
  for (const asgf::BenchmarkFamily& family : asgf::registry()) {
    const asgf::BenchmarkSpec spec = family.make(family.default_dimension);
    std::printf("%-15s %-10s %-22s %s\n", family.name.c_str(),
                family.fixed_dimension ? std::to_string(family.fixed_dimension).c_str()
                                       : "any",
                family.domain_note.c_str(),
                asgf::format_double(spec.global_minimum_value).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-free optimization toolkit: adaptive smoothed-gradient "
               "optimizer, ES/DGS baselines, benchmark harness"};
  app.require_subcommand(1);

  CommonArgs run_args, compare_args, trace_args;
  std::string run_algo = "asgf", compare_algos = "asgf,dgs", trace_algo = "asgf";
  std::string run_parallel = "trials", external_csv;
  int run_trials = 20, compare_trials = 20;
  bool trace_svg = false;

  CLI::App* run = app.add_subcommand("run", "run repeated trials of one algorithm");
  add_common(run, run_args, false);
  run->add_option("--algo", run_algo, "asgf | es | dgs");
  run->add_option("--trials", run_trials, "number of independent trials");
  run->add_option("--parallel", run_parallel,
                  "what workers parallelize: trials | directions");

  CLI::App* cmp = app.add_subcommand("compare", "run several algorithms side by side");
  add_common(cmp, compare_args, false);
  cmp->add_option("--algos", compare_algos, "comma-separated algorithm list");
  cmp->add_option("--trials", compare_trials, "number of independent trials");
  cmp->add_option("--external", external_csv,
                  "results CSV merged verbatim into the table");

  CLI::App* trace = app.add_subcommand("trace", "single seeded run with full trace");
  add_common(trace, trace_args, true);
  trace->add_option("--algo", trace_algo, "asgf | es | dgs");
  trace->add_flag("--svg", trace_svg, "also render convergence.svg");

  CLI::App* list = app.add_subcommand("list-benchmarks", "print the benchmark suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_args, run_algo, run_trials, run_parallel);
    if (cmp->parsed()) {
      return cmd_compare(compare_args, compare_algos, compare_trials, external_csv);
    }
    if (trace->parsed()) return cmd_trace(trace_args, trace_algo, trace_svg);
    if (list->parsed()) return cmd_list_benchmarks();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
