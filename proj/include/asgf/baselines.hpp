#pragma once

#include <cstdint>
#include <span>

#include "asgf/common.hpp"
#include "asgf/optimizer.hpp"
#include "asgf/smoothing.hpp"

namespace asgf {

/// Plain Monte Carlo evolutionary-strategy baseline.
struct EsConfig {
  double sigma = 1.0;
  double learning_rate = 0.01;
  int sample_count = 100;        // Gaussian samples per iteration
  double step_tolerance = 1e-6;  // ‖Δx‖ termination (MC noise rarely triggers it)
  int max_iterations = 10000;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Fixed-hyperparameter directional-smoothing baseline: quadrature gradient
/// over a fresh random orthonormal basis each iteration, constant learning
/// rate, σ multiplied by (1 - sigma_decay) per iteration. No Lipschitz
/// adaptation, no resets, no adaptive refinement.
struct DgsConfig {
  double learning_rate = 0.1;
  int point_count = 5;           // quadrature points per direction (odd ≥ 3)
  double sigma = 1.0;
  double sigma_decay = 0.01;     // per-iteration decay fraction γ
  double step_tolerance = 1e-6;
  int max_iterations = 5000;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Iterates x ← x − (2λ/(σM)) Σ ε_m f(x + σ ε_m). Spends M + 1 evaluations
/// per iteration (the extra one tracks the best-so-far value at the new
/// iterate).
MinimizeResult es_minimize(const Objective& objective, std::span<const double> x0,
                           const EsConfig& config, int worker_count = 1);

/// Spends exactly dimension · point_count evaluations per iteration;
/// best-so-far tracking reuses the center quadrature node's value (odd point
/// counts always sample the current iterate itself).
MinimizeResult dgs_minimize(const Objective& objective, std::span<const double> x0,
                            const DgsConfig& config, int worker_count = 1);

}  // namespace asgf
