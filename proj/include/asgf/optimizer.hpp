#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asgf/common.hpp"
#include "asgf/rng.hpp"
#include "asgf/smoothing.hpp"
#include "asgf/thread_pool.hpp"

namespace asgf {

/// Tuning parameters for the adaptive smoothed-gradient optimizer. The
/// defaults are the fixed set used across all benchmark experiments; only
/// sigma_initial is problem-dependent (the harness sets it to a tenth of
/// the sampling domain's diameter).
struct AsgfConfig {
  double sigma_initial = 1.0;      // starting smoothing radius σ
  double sigma_decay = 0.9;        // σ multiplier when the landscape looks flat
  int aux_point_count = 5;         // quadrature points on auxiliary directions
  double ratio_low = 0.1;          // initial lower threshold on |derivative|/Lipschitz
  double ratio_high = 0.9;         // initial upper threshold
  double ratio_low_shrink = 0.95;  // lower threshold rate, σ-decrease branch
  double ratio_low_grow = 1.02;    // lower threshold rate, middle branch
  double ratio_high_shrink = 0.98; // upper threshold rate, middle branch
  double ratio_high_grow = 1.01;   // upper threshold rate, σ-increase branch
  double lipschitz_momentum = 0.9; // running-average weight on past Lipschitz values
  int reset_budget = 2;            // how many times σ and the basis may be reset
  double reset_fraction = 0.01;    // reset fires when σ < reset_fraction·sigma_initial
  double quadrature_tolerance = 0.1;  // stop refining the main direction at this gap
  double step_tolerance = 1e-6;    // terminate when the iterate moves less than this
  int max_iterations = 10000;
  int main_point_cap = 41;         // adaptive refinement never exceeds this point count
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws std::invalid_argument on out-of-range values
};

enum class StepAction {
  sigma_decreased,        // derivative/Lipschitz ratio below the lower threshold
  sigma_increased,        // ratio above the upper threshold
  thresholds_tightened,   // ratio in band; thresholds moved toward each other
  reset,                  // σ and basis restored to initial values
  terminated,             // step shorter than step_tolerance
  basis_resampled,        // degenerate (zero) gradient; fresh random basis
  fixed_update,           // baseline step (no adaptation); never emitted by ASGF
};

std::string_view to_string(StepAction action);

struct OptimizerState {
  Vector iterate;
  Vector best_point;
  double best_value = 0.0;
  double sigma = 0.0;
  Matrix basis;                    // rows are search directions; row 0 is main
  double averaged_lipschitz = 0.0;
  bool lipschitz_initialized = false;
  double threshold_low = 0.0;
  double threshold_high = 0.0;
  int resets_remaining = 0;
  int iteration = 0;
  std::uint64_t evaluations = 0;   // objective calls made on this optimizer's behalf
};

struct StepReport {
  Vector gradient;
  double learning_rate = 0.0;
  int main_point_count = 0;
  std::uint64_t main_evaluations = 0;  // total calls spent on adaptive refinement
  Vector lipschitz_constants;
  double ratio_max = 0.0;
  StepAction action = StepAction::thresholds_tightened;
  double step_norm = 0.0;
  double current_value = 0.0;      // f at the new iterate (NaN on skipped steps)
  bool threshold_clamped = false;  // middle-branch update skipped to keep A < B
  bool main_converged = true;
};

/// One per-iteration log row.
struct RunTrace {
  int iteration = 0;
  double best_value = 0.0;
  double current_value = 0.0;
  double sigma = 0.0;          // smoothing radius used for this step
  double learning_rate = 0.0;
  std::uint64_t cumulative_evaluations = 0;
  StepAction action = StepAction::thresholds_tightened;
};

enum class TerminationReason { step_tolerance, max_iterations };

std::string_view to_string(TerminationReason reason);

struct MinimizeResult {
  Vector best_point;
  double best_value = 0.0;
  std::vector<RunTrace> trace;
  TerminationReason reason = TerminationReason::max_iterations;
  std::uint64_t evaluations = 0;
};

/// Haar-distributed orthonormal basis (rows), via Gram-Schmidt on Gaussian
/// draws with a reorthogonalization pass.
Matrix random_orthonormal_basis(int dimension, Rng& rng);

/// Orthonormal basis whose first row is exactly main_direction; the
/// complement is random (Haar on the orthogonal subspace). Throws on
/// non-unit input.
Matrix complete_basis(std::span<const double> main_direction, Rng& rng);

/// Refines the main-direction derivative with point counts 3, 5, 7, …,
/// stopping once two consecutive estimates differ by less than `tolerance`.
/// All refinement evaluations hit the objective counter; the returned sample
/// holds the final rule's values and is flagged converged=false if the cap
/// was reached first.
DirectionalSample adaptive_main_derivative(const Objective& objective,
                                           std::span<const double> x, double sigma,
                                           std::span<const double> direction,
                                           double tolerance, int max_points);

/// Folds the latest main-direction Lipschitz constant into the running
/// average (first call adopts it outright) and returns the learning rate
/// σ / averaged_lipschitz — +inf when the average is zero, which the step
/// treats as a degenerate-gradient condition.
double update_learning_rate(OptimizerState& state, double main_lipschitz,
                            double momentum);

/// Smoothing-parameter / direction update applied after a non-terminating
/// step: either a reset (σ below reset_fraction·σ₀ with budget left) or the
/// gradient-aligned basis plus the three-way threshold branch on
/// max_j |derivative_j| / L_j (0/0 counts as 0).
void update_parameters(OptimizerState& state, std::span<const double> gradient,
                       std::span<const DirectionalSample> samples,
                       const AsgfConfig& config, Rng& rng, StepReport& report);

/// Step-wise driver around the algorithm; use run() for the plain loop or
/// step() to interleave custom bookkeeping (the harness records traces and
/// invariant checks this way).
class AsgfOptimizer {
 public:
  AsgfOptimizer(const Objective& objective, Vector start, AsgfConfig config,
                int worker_count = 1);

  StepReport step();  // throws std::logic_error once finished
  bool finished() const { return finished_; }
  const OptimizerState& state() const { return state_; }
  const AsgfConfig& config() const { return config_; }
  const std::vector<RunTrace>& trace() const { return trace_; }

  MinimizeResult run();

 private:
  const Objective* objective_;
  AsgfConfig config_;
  Rng rng_;
  ThreadPool pool_;
  OptimizerState state_;
  std::vector<RunTrace> trace_;
  std::uint64_t evaluation_base_ = 0;
  bool finished_ = false;
};

MinimizeResult minimize(const Objective& objective, std::span<const double> x0,
                        const AsgfConfig& config, int worker_count = 1);

}  // namespace asgf
