#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asgf/baselines.hpp"
#include "asgf/benchmarks.hpp"
#include "asgf/optimizer.hpp"

namespace asgf {

enum class Algorithm { asgf, es, dgs };

Algorithm algorithm_from_string(std::string_view name);
std::string_view to_string(Algorithm algorithm);

/// Settings for every algorithm; a plan uses the one matching its
/// algorithm tag. When sigma_pinned is false the ASGF smoothing radius is
/// derived from the benchmark domain (diameter / 10).
struct AlgorithmConfig {
  AsgfConfig asgf;
  EsConfig es;
  DgsConfig dgs;
  bool sigma_pinned = false;
};

struct ExperimentPlan {
  std::string benchmark_id;  // e.g. "sphere-10"
  Algorithm algorithm = Algorithm::asgf;
  int trial_count = 1;
  std::uint64_t base_seed = 0;
  AlgorithmConfig config;
  std::filesystem::path output_dir;  // empty: keep everything in memory
  int worker_count = 1;
  std::string worker_count_source = "default";  // default | env | flag
  bool parallel_trials = true;  // false: workers parallelize directions instead
  bool write_traces = true;
};

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  bool success = false;
  bool errored = false;
  std::string error;
  int iterations = 0;               // until the algorithm stopped
  std::uint64_t evaluations = 0;    // total, equal to the objective counter
  int iterations_to_success = 0;    // first iteration within tolerance (if success)
  std::uint64_t evaluations_to_success = 0;
  double best_value = 0.0;
  std::string termination;
  std::vector<RunTrace> trace;
};

/// Aggregate over one plan's trials. Means cover successful trials only and
/// are absent when nothing succeeded; failed or errored trials still count
/// in the success-rate denominator. A trial converges at the first iteration
/// whose best-so-far value is within tolerance of the global minimum, and
/// the means count iterations/evaluations up to that point (the algorithm
/// itself may keep polishing afterwards until its stopping rule fires).
struct SummaryRow {
  std::string benchmark;
  std::string algorithm;
  int trial_count = 0;
  int successes = 0;
  double success_rate = 0.0;
  std::optional<double> mean_iterations_on_success;
  std::optional<double> mean_evaluations_on_success;
};

struct ExperimentResult {
  SummaryRow summary;
  std::vector<TrialResult> trials;
  std::string summary_json;  // what run_experiment wrote to summary.json
};

/// Runs trial_count independent optimizations. Trial k draws x0 uniformly
/// from the benchmark domain under seed base_seed + k, so algorithms that
/// share a base seed share initial points; per-trial algorithm errors are
/// recorded as failed trials. With an output_dir set, writes one trace CSV
/// per trial plus summary.json (byte-deterministic: stable key order,
/// shortest round-trip floats, no timestamps).
ExperimentResult run_experiment(const ExperimentPlan& plan);

/// One comparison line; fields stay strings so externally supplied rows
/// pass through verbatim.
struct ComparisonRow {
  std::string benchmark;
  std::string algorithm;
  std::string trial_count;
  std::string success_rate;
  std::string mean_iterations_on_success;
  std::string mean_evaluations_on_success;
  std::string source;  // "run" or "external"
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::string to_csv() const;
  std::string to_text() const;  // aligned columns
};

/// Runs each plan (all must share benchmark and base_seed) and merges the
/// summaries, optionally appending rows from an external results CSV whose
/// header matches to_csv()'s.
ComparisonTable compare(std::span<const ExperimentPlan> plans,
                        const std::optional<std::filesystem::path>& external_csv = {});

/// Writes convergence-curve data for plotting: curves_by_iteration.csv has
/// one column per trial plus across-trial quartiles (linear interpolation on
/// sorted values, h = (n-1)p; trials that terminated early carry their last
/// best value forward), curves_by_evaluation.csv is long-format rows of
/// (trial, iteration, cumulative_evaluations, best_value). Optionally also
/// renders a simple SVG line chart. Throws on empty input before touching
/// the filesystem.
void emit_convergence_plot_data(std::span<const std::vector<RunTrace>> traces,
                                const std::filesystem::path& out_dir,
                                bool render_svg = false);

/// Quantile with linear interpolation on sorted data (h = (n-1)·p).
double interpolated_quantile(std::vector<double> values, double p);

/// Flat INI-style config: [asgf]/[es]/[dgs] sections, key = value lines,
/// '#' or ';' comments. Returns "section.key" -> value.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

/// Applies parsed entries onto the config structs; unknown keys or
/// malformed values throw. An explicit asgf.sigma_initial pins sigma.
void apply_config(const std::map<std::string, std::string>& entries,
                  AlgorithmConfig& config);

/// Worker count from ASGF_WORKERS when set, else 1; `source` reports which.
int default_worker_count(std::string& source);

/// Shortest round-trip decimal representation (the CSV/JSON float format).
std::string format_double(double value);

void write_trace_csv(const std::vector<RunTrace>& trace,
                     const std::filesystem::path& path);

}  // namespace asgf
