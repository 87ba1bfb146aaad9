#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asgf/common.hpp"
#include "asgf/rng.hpp"
#include "asgf/smoothing.hpp"

namespace asgf {

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// One test problem instance: a pure deterministic evaluator with its
/// standard sampling box, known global minimum, and the success predicate
/// (value within success_tolerance of the minimum).
struct BenchmarkSpec {
  std::string name;       // family name, e.g. "ackley"
  int dimension = 0;
  std::vector<Bounds> sample_domain;
  double global_minimum_value = 0.0;
  Vector known_minimizer;
  double success_tolerance = 1e-4;
  std::function<double(std::span<const double>)> evaluate;

  std::string id() const;  // "ackley-10"

  /// Fresh counting wrapper around the evaluator (one per trial).
  Objective make_objective() const;

  /// Euclidean diameter of the sampling box.
  double domain_diameter() const;

  /// Smoothing-radius heuristic: a tenth of the domain diameter.
  double suggested_sigma_initial() const { return domain_diameter() / 10.0; }

  /// Uniform draw from the sampling box.
  Vector sample_initial_point(Rng& rng) const;
};

/// A test-function family; dimension 0 means any dimension is accepted.
struct BenchmarkFamily {
  std::string name;
  int fixed_dimension = 0;
  int default_dimension = 2;
  std::string domain_note;
  BenchmarkSpec (*make)(int dimension) = nullptr;
};

/// All registered families: branin, cross_in_tray, dropwave (fixed d=2) and
/// sphere, ackley, levy, rastrigin (any d).
const std::vector<BenchmarkFamily>& registry();

/// Instantiates a family at a dimension. Throws on unknown names or a
/// dimension the family does not support.
BenchmarkSpec make_benchmark(const std::string& name, int dimension);

/// Parses "name-dim" identifiers used by the CLI ("ackley-10",
/// "rastrigin-1000"); a bare family name uses its default dimension.
BenchmarkSpec lookup(std::string_view id);

bool is_success(const BenchmarkSpec& spec, double achieved_value);

}  // namespace asgf
