#include "asgf/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "asgf/thread_pool.hpp"

namespace asgf {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kComparisonHeader =
    "benchmark,algorithm,trial_count,success_rate,mean_iterations_on_success,"
    "mean_evaluations_on_success";

std::uint64_t initial_point_seed(std::uint64_t trial_seed) {
  return splitmix64(trial_seed);
}

std::uint64_t algorithm_seed(std::uint64_t trial_seed) {
  // Distinct tag keeps the algorithm stream independent of the x0 stream.
  return splitmix64(trial_seed ^ 0xa5a5a5a5a5a5a5a5ULL);
}

double parse_double_value(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("config: expected a number, got '" + text + "'");
  }
  return value;
}

template <typename Int>
Int parse_int_value(const std::string& text) {
  Int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("config: expected an integer, got '" + text + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "asgf") return Algorithm::asgf;
  if (name == "es") return Algorithm::es;
  if (name == "dgs") return Algorithm::dgs;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::asgf: return "asgf";
    case Algorithm::es: return "es";
    case Algorithm::dgs: return "dgs";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void write_trace_csv(const std::vector<RunTrace>& trace,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "iteration,best_value,current_value,sigma,learning_rate,"
         "cumulative_evaluations,action\n";
  for (const RunTrace& row : trace) {
    out << row.iteration << ',' << format_double(row.best_value) << ','
        << format_double(row.current_value) << ',' << format_double(row.sigma) << ','
        << format_double(row.learning_rate) << ',' << row.cumulative_evaluations
        << ',' << to_string(row.action) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

ordered_json effective_config_json(const ExperimentPlan& plan,
                                   const AsgfConfig& asgf) {
  ordered_json j;
  switch (plan.algorithm) {
    case Algorithm::asgf:
      j["sigma_initial"] = asgf.sigma_initial;
      j["sigma_decay"] = asgf.sigma_decay;
      j["aux_point_count"] = asgf.aux_point_count;
      j["ratio_low"] = asgf.ratio_low;
      j["ratio_high"] = asgf.ratio_high;
      j["ratio_low_shrink"] = asgf.ratio_low_shrink;
      j["ratio_low_grow"] = asgf.ratio_low_grow;
      j["ratio_high_shrink"] = asgf.ratio_high_shrink;
      j["ratio_high_grow"] = asgf.ratio_high_grow;
      j["lipschitz_momentum"] = asgf.lipschitz_momentum;
      j["reset_budget"] = asgf.reset_budget;
      j["reset_fraction"] = asgf.reset_fraction;
      j["quadrature_tolerance"] = asgf.quadrature_tolerance;
      j["step_tolerance"] = asgf.step_tolerance;
      j["max_iterations"] = asgf.max_iterations;
      j["main_point_cap"] = asgf.main_point_cap;
      break;
    case Algorithm::es: {
      const EsConfig& es = plan.config.es;
      j["sigma"] = es.sigma;
      j["learning_rate"] = es.learning_rate;
      j["sample_count"] = es.sample_count;
      j["step_tolerance"] = es.step_tolerance;
      j["max_iterations"] = es.max_iterations;
      break;
    }
    case Algorithm::dgs: {
      const DgsConfig& dgs = plan.config.dgs;
      j["learning_rate"] = dgs.learning_rate;
      j["point_count"] = dgs.point_count;
      j["sigma"] = dgs.sigma;
      j["sigma_decay"] = dgs.sigma_decay;
      j["step_tolerance"] = dgs.step_tolerance;
      j["max_iterations"] = dgs.max_iterations;
      break;
    }
  }
  return j;
}

TrialResult run_trial(const BenchmarkSpec& spec, const ExperimentPlan& plan,
                      const AsgfConfig& asgf_config, int index,
                      int direction_workers) {
  TrialResult trial;
  trial.index = index;
  trial.seed = plan.base_seed + static_cast<std::uint64_t>(index);

  Rng init_rng(initial_point_seed(trial.seed));
  const Vector x0 = spec.sample_initial_point(init_rng);
  Objective objective = spec.make_objective();

  try {
    MinimizeResult result;
    switch (plan.algorithm) {
      case Algorithm::asgf: {
        AsgfConfig c = asgf_config;
        c.rng_seed = algorithm_seed(trial.seed);
        result = minimize(objective, x0, c, direction_workers);
        break;
      }
      case Algorithm::es: {
        EsConfig c = plan.config.es;
        c.rng_seed = algorithm_seed(trial.seed);
        result = es_minimize(objective, x0, c, direction_workers);
        break;
      }
      case Algorithm::dgs: {
        DgsConfig c = plan.config.dgs;
        c.rng_seed = algorithm_seed(trial.seed);
        result = dgs_minimize(objective, x0, c, direction_workers);
        break;
      }
    }
    trial.best_value = result.best_value;
    trial.evaluations = result.evaluations;
    trial.iterations = result.trace.empty() ? 0 : result.trace.back().iteration;
    trial.termination = std::string(to_string(result.reason));
    trial.success = is_success(spec, result.best_value);
    if (trial.success) {
      for (const RunTrace& row : result.trace) {
        if (is_success(spec, row.best_value)) {
          trial.iterations_to_success = row.iteration;
          trial.evaluations_to_success = row.cumulative_evaluations;
          break;
        }
      }
    }
    trial.trace = std::move(result.trace);
  } catch (const std::exception& e) {
    trial.errored = true;
    trial.error = e.what();
    trial.best_value = std::numeric_limits<double>::quiet_NaN();
    trial.evaluations = objective.evaluation_count();
    trial.termination = "error";
  }
  return trial;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentPlan& plan) {
  require(plan.trial_count >= 1, "trial_count must be positive");
  require(plan.worker_count >= 1, "worker_count must be positive");
  const BenchmarkSpec spec = lookup(plan.benchmark_id);

  AsgfConfig asgf_config = plan.config.asgf;
  if (!plan.config.sigma_pinned) {
    asgf_config.sigma_initial = spec.suggested_sigma_initial();
  }
  asgf_config.validate();
  plan.config.es.validate();
  plan.config.dgs.validate();

  const int trial_workers = plan.parallel_trials ? plan.worker_count : 1;
  const int direction_workers = plan.parallel_trials ? 1 : plan.worker_count;

  std::vector<TrialResult> trials(plan.trial_count);
  {
    ThreadPool pool(trial_workers);
    pool.parallel_for(plan.trial_count, [&](std::size_t k) {
      trials[k] = run_trial(spec, plan, asgf_config, static_cast<int>(k),
                            direction_workers);
    });
  }

  SummaryRow summary;
  summary.benchmark = spec.id();
  summary.algorithm = std::string(to_string(plan.algorithm));
  summary.trial_count = plan.trial_count;
  double iteration_sum = 0.0;
  double evaluation_sum = 0.0;
  for (const TrialResult& t : trials) {
    if (!t.success) continue;
    ++summary.successes;
    iteration_sum += t.iterations_to_success;
    evaluation_sum += static_cast<double>(t.evaluations_to_success);
  }
  summary.success_rate =
      static_cast<double>(summary.successes) / plan.trial_count;
  if (summary.successes > 0) {
    summary.mean_iterations_on_success = iteration_sum / summary.successes;
    summary.mean_evaluations_on_success = evaluation_sum / summary.successes;
  }

  ordered_json j;
  j["benchmark"] = summary.benchmark;
  j["algorithm"] = summary.algorithm;
  j["trial_count"] = summary.trial_count;
  j["base_seed"] = plan.base_seed;
  j["worker_count"] = plan.worker_count;
  j["worker_count_source"] = plan.worker_count_source;
  j["parallel_mode"] = plan.parallel_trials ? "trials" : "directions";
  j["success_rate"] = summary.success_rate;
  j["successes"] = summary.successes;
  if (summary.mean_iterations_on_success) {
    j["mean_iterations_on_success"] = *summary.mean_iterations_on_success;
  }
  if (summary.mean_evaluations_on_success) {
    j["mean_evaluations_on_success"] = *summary.mean_evaluations_on_success;
  }
  j["config"] = effective_config_json(plan, asgf_config);
  ordered_json trials_json = ordered_json::array();
  for (const TrialResult& t : trials) {
    ordered_json tj;
    tj["trial"] = t.index;
    tj["seed"] = t.seed;
    tj["success"] = t.success;
    if (t.errored) tj["error"] = t.error;
    tj["iterations"] = t.iterations;
    tj["evaluations"] = t.evaluations;
    if (t.success) {
      tj["iterations_to_success"] = t.iterations_to_success;
      tj["evaluations_to_success"] = t.evaluations_to_success;
    }
    tj["best_value"] = t.best_value;
    tj["termination"] = t.termination;
    trials_json.push_back(std::move(tj));
  }
  j["trials"] = std::move(trials_json);

  ExperimentResult result;
  result.summary = std::move(summary);
  result.summary_json = j.dump(2) + "\n";

  if (!plan.output_dir.empty()) {
    std::filesystem::create_directories(plan.output_dir);
    if (plan.write_traces) {
      for (const TrialResult& t : trials) {
        char name[32];
        std::snprintf(name, sizeof(name), "trace_%04d.csv", t.index);
        write_trace_csv(t.trace, plan.output_dir / name);
      }
    }
    std::ofstream out(plan.output_dir / "summary.json");
    if (!out) {
      throw std::runtime_error("cannot write " +
                               (plan.output_dir / "summary.json").string());
    }
    out << result.summary_json;
  }

  result.trials = std::move(trials);
  return result;
}

std::string ComparisonTable::to_csv() const {
  std::string out(kComparisonHeader);
  out += '\n';
  for (const ComparisonRow& r : rows) {
    out += r.benchmark + ',' + r.algorithm + ',' + r.trial_count + ',' +
           r.success_rate + ',' + r.mean_iterations_on_success + ',' +
           r.mean_evaluations_on_success + '\n';
  }
  return out;
}

std::string ComparisonTable::to_text() const {
  const std::array<std::string, 7> header = {
      "benchmark", "algorithm", "trials", "success_rate",
      "mean_iterations", "mean_evaluations", "source"};
  std::vector<std::array<std::string, 7>> cells;
  cells.push_back(header);
  for (const ComparisonRow& r : rows) {
    cells.push_back({r.benchmark, r.algorithm, r.trial_count, r.success_rate,
                     r.mean_iterations_on_success, r.mean_evaluations_on_success,
                     r.source});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      out += cells[i][c];
      if (c + 1 < cells[i].size()) {
        out.append(width[c] - cells[i][c].size() + 2, ' ');
      }
    }
    out += '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + 2;
      out.append(total - 2, '-');
      out += '\n';
    }
  }
  return out;
}

ComparisonTable compare(std::span<const ExperimentPlan> plans,
                        const std::optional<std::filesystem::path>& external_csv) {
  require(!plans.empty(), "compare: no plans");
  for (const ExperimentPlan& plan : plans) {
    if (plan.benchmark_id != plans[0].benchmark_id ||
        plan.base_seed != plans[0].base_seed) {
      throw std::invalid_argument(
          "compare: plans must share benchmark and base_seed");
    }
  }

  ComparisonTable table;
  for (const ExperimentPlan& plan : plans) {
    const ExperimentResult result = run_experiment(plan);
    const SummaryRow& s = result.summary;
    ComparisonRow row;
    row.benchmark = s.benchmark;
    row.algorithm = s.algorithm;
    row.trial_count = std::to_string(s.trial_count);
    row.success_rate = format_double(s.success_rate);
    row.mean_iterations_on_success =
        s.mean_iterations_on_success ? format_double(*s.mean_iterations_on_success)
                                     : "-";
    row.mean_evaluations_on_success =
        s.mean_evaluations_on_success ? format_double(*s.mean_evaluations_on_success)
                                      : "-";
    row.source = "run";
    table.rows.push_back(std::move(row));
  }

  if (external_csv) {
    std::ifstream in(*external_csv);
    if (!in) {
      throw std::runtime_error("cannot open external CSV: " +
                               external_csv->string());
    }
    std::string line;
    if (!std::getline(in, line) || trim(line) != kComparisonHeader) {
      throw std::invalid_argument("external CSV header must be: " +
                                  std::string(kComparisonHeader));
    }
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) fields.push_back(trim(field));
      if (fields.size() != 6) {
        throw std::invalid_argument("external CSV row must have 6 fields: " + line);
      }
      // External values pass through verbatim.
      table.rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4],
                            fields[5], "external"});
    }
  }
  return table;
}

double interpolated_quantile(std::vector<double> values, double p) {
  require(!values.empty(), "quantile of empty set");
  require(p >= 0.0 && p <= 1.0, "quantile level must be in [0,1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

namespace {

void write_svg(const std::filesystem::path& path,
               const std::vector<std::vector<double>>& curves) {
  const double width = 800.0, height = 500.0, margin = 50.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t max_len = 0;
  for (const auto& c : curves) {
    max_len = std::max(max_len, c.size());
    for (double v : c) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi <= lo) hi = lo + 1.0;

  const auto x_of = [&](std::size_t i) {
    return margin + (width - 2 * margin) *
                        (max_len > 1 ? static_cast<double>(i) / (max_len - 1) : 0.5);
  };
  const auto y_of = [&](double v) {
    return height - margin - (height - 2 * margin) * (v - lo) / (hi - lo);
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"" << margin - 10
      << "\" font-size=\"12\">best value, max " << format_double(hi)
      << ", min " << format_double(lo) << "</text>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 30
      << "\" font-size=\"12\" text-anchor=\"end\">iteration 1.." << max_len
      << "</text>\n";
  for (const auto& curve : curves) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" "
           "points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      out << x_of(i) << ',' << y_of(curve[i]) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void emit_convergence_plot_data(std::span<const std::vector<RunTrace>> traces,
                                const std::filesystem::path& out_dir,
                                bool render_svg) {
  require(!traces.empty(), "emit_convergence_plot_data: no traces");
  std::size_t max_len = 0;
  for (const auto& trace : traces) {
    require(!trace.empty(), "emit_convergence_plot_data: empty trace");
    max_len = std::max(max_len, trace.size());
  }
  std::filesystem::create_directories(out_dir);

  // Best-so-far per iteration index; early-terminating trials carry their
  // final value forward so quartiles stay defined on a full grid.
  std::vector<std::vector<double>> curves(traces.size());
  for (std::size_t t = 0; t < traces.size(); ++t) {
    curves[t].resize(max_len);
    for (std::size_t i = 0; i < max_len; ++i) {
      curves[t][i] = traces[t][std::min(i, traces[t].size() - 1)].best_value;
    }
  }

  {
    std::ofstream out(out_dir / "curves_by_iteration.csv");
    if (!out) {
      throw std::runtime_error("cannot write " +
                               (out_dir / "curves_by_iteration.csv").string());
    }
    out << "iteration";
    for (std::size_t t = 0; t < traces.size(); ++t) out << ",trial_" << t;
    out << ",q25,median,q75\n";
    std::vector<double> column(traces.size());
    for (std::size_t i = 0; i < max_len; ++i) {
      out << (i + 1);
      for (std::size_t t = 0; t < traces.size(); ++t) {
        column[t] = curves[t][i];
        out << ',' << format_double(curves[t][i]);
      }
      out << ',' << format_double(interpolated_quantile(column, 0.25)) << ','
          << format_double(interpolated_quantile(column, 0.5)) << ','
          << format_double(interpolated_quantile(column, 0.75)) << '\n';
    }
  }

  {
    std::ofstream out(out_dir / "curves_by_evaluation.csv");
    if (!out) {
      throw std::runtime_error("cannot write " +
                               (out_dir / "curves_by_evaluation.csv").string());
    }
    out << "trial,iteration,cumulative_evaluations,best_value\n";
    for (std::size_t t = 0; t < traces.size(); ++t) {
      for (const RunTrace& row : traces[t]) {
        out << t << ',' << row.iteration << ',' << row.cumulative_evaluations << ','
            << format_double(row.best_value) << '\n';
      }
    }
  }

  if (render_svg) write_svg(out_dir / "convergence.svg", curves);
}

std::map<std::string, std::string> parse_config_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path.string());

  std::map<std::string, std::string> entries;
  std::string section;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3) {
        throw std::invalid_argument("config line " + std::to_string(line_number) +
                                    ": malformed section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (section.empty() || key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": key outside a [section] or empty key");
    }
    entries[section + "." + key] = value;
  }
  return entries;
}

void apply_config(const std::map<std::string, std::string>& entries,
                  AlgorithmConfig& config) {
  using Setter = std::function<void(const std::string&)>;
  std::map<std::string, Setter> setters;

  const auto dbl = [](double& target) {
    return [&target](const std::string& v) { target = parse_double_value(v); };
  };
  const auto integer = [](int& target) {
    return [&target](const std::string& v) { target = parse_int_value<int>(v); };
  };
  const auto seed = [](std::uint64_t& target) {
    return
        [&target](const std::string& v) { target = parse_int_value<std::uint64_t>(v); };
  };

  AsgfConfig& a = config.asgf;
  setters["asgf.sigma_initial"] = [&](const std::string& v) {
    a.sigma_initial = parse_double_value(v);
    config.sigma_pinned = true;
  };
  setters["asgf.sigma_decay"] = dbl(a.sigma_decay);
  setters["asgf.aux_point_count"] = integer(a.aux_point_count);
  setters["asgf.ratio_low"] = dbl(a.ratio_low);
  setters["asgf.ratio_high"] = dbl(a.ratio_high);
  setters["asgf.ratio_low_shrink"] = dbl(a.ratio_low_shrink);
  setters["asgf.ratio_low_grow"] = dbl(a.ratio_low_grow);
  setters["asgf.ratio_high_shrink"] = dbl(a.ratio_high_shrink);
  setters["asgf.ratio_high_grow"] = dbl(a.ratio_high_grow);
  setters["asgf.lipschitz_momentum"] = dbl(a.lipschitz_momentum);
  setters["asgf.reset_budget"] = integer(a.reset_budget);
  setters["asgf.reset_fraction"] = dbl(a.reset_fraction);
  setters["asgf.quadrature_tolerance"] = dbl(a.quadrature_tolerance);
  setters["asgf.step_tolerance"] = dbl(a.step_tolerance);
  setters["asgf.max_iterations"] = integer(a.max_iterations);
  setters["asgf.main_point_cap"] = integer(a.main_point_cap);
  setters["asgf.rng_seed"] = seed(a.rng_seed);

  EsConfig& e = config.es;
  setters["es.sigma"] = dbl(e.sigma);
  setters["es.learning_rate"] = dbl(e.learning_rate);
  setters["es.sample_count"] = integer(e.sample_count);
  setters["es.step_tolerance"] = dbl(e.step_tolerance);
  setters["es.max_iterations"] = integer(e.max_iterations);
  setters["es.rng_seed"] = seed(e.rng_seed);

  DgsConfig& g = config.dgs;
  setters["dgs.learning_rate"] = dbl(g.learning_rate);
  setters["dgs.point_count"] = integer(g.point_count);
  setters["dgs.sigma"] = dbl(g.sigma);
  setters["dgs.sigma_decay"] = dbl(g.sigma_decay);
  setters["dgs.step_tolerance"] = dbl(g.step_tolerance);
  setters["dgs.max_iterations"] = integer(g.max_iterations);
  setters["dgs.rng_seed"] = seed(g.rng_seed);

  for (const auto& [key, value] : entries) {
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument("unknown config key: " + key);
    }
    it->second(value);
  }
}

int default_worker_count(std::string& source) {
  if (const char* env = std::getenv("ASGF_WORKERS")) {
    const int workers = parse_int_value<int>(std::string(env));
    if (workers < 1) {
      throw std::invalid_argument("ASGF_WORKERS must be a positive integer");
    }
    source = "env";
    return workers;
  }
  source = "default";
  return 1;
}

}  // namespace asgf
