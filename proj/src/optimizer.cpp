#include "asgf/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "asgf/kernels.hpp"
#include "asgf/quadrature.hpp"

namespace asgf {

void AsgfConfig::validate() const {
  require(sigma_initial > 0.0, "sigma_initial must be positive");
  require(sigma_decay > 0.0 && sigma_decay < 1.0, "sigma_decay must be in (0,1)");
  require(aux_point_count >= 3 && aux_point_count % 2 == 1,
          "aux_point_count must be an odd integer >= 3");
  require(ratio_low > 0.0 && ratio_low < 1.0, "ratio_low must be in (0,1)");
  require(ratio_high > 0.0 && ratio_high < 1.0, "ratio_high must be in (0,1)");
  require(ratio_low < ratio_high, "ratio_low must be below ratio_high");
  require(ratio_low_shrink > 0.0 && ratio_low_shrink < 1.0,
          "ratio_low_shrink must be in (0,1)");
  require(ratio_low_grow > 1.0, "ratio_low_grow must exceed 1");
  require(ratio_high_shrink > 0.0 && ratio_high_shrink < 1.0,
          "ratio_high_shrink must be in (0,1)");
  require(ratio_high_grow > 1.0, "ratio_high_grow must exceed 1");
  require(lipschitz_momentum >= 0.0 && lipschitz_momentum < 1.0,
          "lipschitz_momentum must be in [0,1)");
  require(reset_budget >= 0, "reset_budget must be nonnegative");
  require(reset_fraction > 0.0 && reset_fraction < 1.0,
          "reset_fraction must be in (0,1)");
  require(quadrature_tolerance > 0.0, "quadrature_tolerance must be positive");
  require(step_tolerance > 0.0, "step_tolerance must be positive");
  require(max_iterations >= 1, "max_iterations must be positive");
  require(main_point_cap >= 3 && main_point_cap % 2 == 1,
          "main_point_cap must be an odd integer >= 3");
}

std::string_view to_string(StepAction action) {
  switch (action) {
    case StepAction::sigma_decreased: return "sigma_decreased";
    case StepAction::sigma_increased: return "sigma_increased";
    case StepAction::thresholds_tightened: return "thresholds_tightened";
    case StepAction::reset: return "reset";
    case StepAction::terminated: return "terminated";
    case StepAction::basis_resampled: return "basis_resampled";
    case StepAction::fixed_update: return "fixed_update";
  }
  return "unknown";
}

std::string_view to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::step_tolerance: return "step_tolerance";
    case TerminationReason::max_iterations: return "max_iterations";
  }
  return "unknown";
}

Matrix random_orthonormal_basis(int dimension, Rng& rng) {
  require(dimension >= 1, "dimension must be positive");
  Matrix basis(dimension, dimension);
  for (int i = 0; i < dimension; ++i) rng.fill_normal(basis.row(i));
  detail::orthonormalize_rows(basis, 0, dimension, rng);
  return basis;
}

Matrix complete_basis(std::span<const double> main_direction, Rng& rng) {
  const std::size_t d = main_direction.size();
  require(d >= 1, "main direction must be nonempty");
  const double n = kernels::norm(main_direction);
  if (!(std::abs(n - 1.0) <= 1e-8)) {
    throw std::invalid_argument("complete_basis: main direction must be unit-norm");
  }
  Matrix basis(d, d);
  std::copy(main_direction.begin(), main_direction.end(), basis.row(0).begin());
  for (std::size_t i = 1; i < d; ++i) rng.fill_normal(basis.row(i));
  detail::orthonormalize_rows(basis, 1, d, rng);
  return basis;
}

DirectionalSample adaptive_main_derivative(const Objective& objective,
                                           std::span<const double> x, double sigma,
                                           std::span<const double> direction,
                                           double tolerance, int max_points) {
  require(tolerance > 0.0, "tolerance must be positive");
  require(max_points >= 3, "max_points must be >= 3");

  DirectionalSample current =
      directional_derivative(objective, x, sigma, direction, gauss_hermite_rule(3));
  std::uint64_t used = 3;
  bool converged = false;
  while (current.point_count + 2 <= max_points) {
    const int m = current.point_count + 2;
    DirectionalSample next =
        directional_derivative(objective, x, sigma, direction, gauss_hermite_rule(m));
    used += static_cast<std::uint64_t>(m);
    const bool close =
        std::abs(next.derivative_estimate - current.derivative_estimate) < tolerance;
    current = std::move(next);
    if (close) {
      converged = true;
      break;
    }
  }
  current.converged = converged;
  current.evaluations_used = used;
  return current;
}

double update_learning_rate(OptimizerState& state, double main_lipschitz,
                            double momentum) {
  if (!state.lipschitz_initialized) {
    state.averaged_lipschitz = main_lipschitz;
    state.lipschitz_initialized = true;
  } else {
    state.averaged_lipschitz =
        (1.0 - momentum) * main_lipschitz + momentum * state.averaged_lipschitz;
  }
  // A zero average (flat landscape so far) yields +inf, which the step
  // handles as a degenerate-gradient condition.
  return state.sigma / state.averaged_lipschitz;
}

namespace {

double derivative_lipschitz_ratio(std::span<const DirectionalSample> samples) {
  double ratio_max = 0.0;
  for (const DirectionalSample& s : samples) {
    // Flat direction (L_j = 0) carries no adaptation signal.
    if (s.lipschitz_estimate > 0.0) {
      const double r = std::abs(s.derivative_estimate) / s.lipschitz_estimate;
      if (r > ratio_max) ratio_max = r;
    }
  }
  return ratio_max;
}

}  // namespace

void update_parameters(OptimizerState& state, std::span<const double> gradient,
                       std::span<const DirectionalSample> samples,
                       const AsgfConfig& config, Rng& rng, StepReport& report) {
  const std::size_t d = gradient.size();
  report.ratio_max = derivative_lipschitz_ratio(samples);

  if (state.resets_remaining > 0 &&
      state.sigma < config.reset_fraction * config.sigma_initial) {
    state.basis = random_orthonormal_basis(static_cast<int>(d), rng);
    state.sigma = config.sigma_initial;
    state.threshold_low = config.ratio_low;
    state.threshold_high = config.ratio_high;
    --state.resets_remaining;
    report.action = StepAction::reset;
    return;
  }

  Vector main(gradient.begin(), gradient.end());
  kernels::scale(main, 1.0 / kernels::norm(main));
  state.basis = complete_basis(main, rng);

  if (report.ratio_max < state.threshold_low) {
    state.sigma *= config.sigma_decay;
    state.threshold_low *= config.ratio_low_shrink;
    report.action = StepAction::sigma_decreased;
  } else if (report.ratio_max > state.threshold_high) {
    state.sigma /= config.sigma_decay;
    state.threshold_high *= config.ratio_high_grow;
    report.action = StepAction::sigma_increased;
  } else {
    const double low = state.threshold_low * config.ratio_low_grow;
    const double high = state.threshold_high * config.ratio_high_shrink;
    if (low < high) {
      state.threshold_low = low;
      state.threshold_high = high;
    } else {
      report.threshold_clamped = true;  // keep the band ordered; skip the move
    }
    report.action = StepAction::thresholds_tightened;
  }
}

AsgfOptimizer::AsgfOptimizer(const Objective& objective, Vector start,
                             AsgfConfig config, int worker_count)
    : objective_(&objective),
      config_(config),
      rng_(config.rng_seed),
      pool_(worker_count) {
  config_.validate();
  if (static_cast<int>(start.size()) != objective.dimension()) {
    throw std::invalid_argument("start point dimension mismatch");
  }
  for (double v : start) {
    require(std::isfinite(v), "start point must be finite");
  }

  evaluation_base_ = objective.evaluation_count();
  state_.iterate = std::move(start);
  state_.sigma = config_.sigma_initial;
  state_.threshold_low = config_.ratio_low;
  state_.threshold_high = config_.ratio_high;
  state_.resets_remaining = config_.reset_budget;
  state_.basis = random_orthonormal_basis(objective.dimension(), rng_);
  state_.best_point = state_.iterate;
  state_.best_value = (*objective_)(state_.iterate);
  state_.evaluations = objective.evaluation_count() - evaluation_base_;
}

StepReport AsgfOptimizer::step() {
  if (finished_) throw std::logic_error("AsgfOptimizer::step called after termination");

  const std::size_t d = state_.iterate.size();
  const QuadratureRule& aux_rule = gauss_hermite_rule(config_.aux_point_count);
  const Vector& x = state_.iterate;

  std::vector<DirectionalSample> samples(d);
  pool_.parallel_for(d, [&](std::size_t j) {
    if (j == 0) {
      samples[0] = adaptive_main_derivative(*objective_, x, state_.sigma,
                                            state_.basis.row(0),
                                            config_.quadrature_tolerance,
                                            config_.main_point_cap);
    } else {
      samples[j] = directional_derivative(*objective_, x, state_.sigma,
                                          state_.basis.row(j), aux_rule);
    }
  });

  StepReport report;
  report.main_point_count = samples[0].point_count;
  report.main_evaluations = samples[0].evaluations_used;
  report.main_converged = samples[0].converged;
  report.lipschitz_constants.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    report.lipschitz_constants[j] = samples[j].lipschitz_estimate;
  }

  const double sigma_at_step = state_.sigma;
  const double lambda =
      update_learning_rate(state_, samples[0].lipschitz_estimate,
                           config_.lipschitz_momentum);
  report.gradient = assemble_gradient(samples);
  const double gradient_norm = kernels::norm(report.gradient);

  if (gradient_norm == 0.0 || !std::isfinite(lambda)) {
    // A zero smoothed gradient at large σ does not imply optimality; try
    // fresh directions next iteration and leave σ and the iterate alone.
    report.ratio_max = derivative_lipschitz_ratio(samples);
    report.action = StepAction::basis_resampled;
    report.current_value = std::numeric_limits<double>::quiet_NaN();
    state_.basis = random_orthonormal_basis(static_cast<int>(d), rng_);
    ++state_.iteration;
    state_.evaluations = objective_->evaluation_count() - evaluation_base_;
    trace_.push_back({state_.iteration, state_.best_value, report.current_value,
                      sigma_at_step, 0.0, state_.evaluations, report.action});
    return report;
  }

  report.learning_rate = lambda;
  Vector next(d);
  kernels::scale_add(next, x, -lambda, report.gradient);
  const double value = (*objective_)(next);
  report.current_value = value;
  if (value < state_.best_value) {
    state_.best_point = next;
    state_.best_value = value;
  }
  Vector displacement(d);
  kernels::scale_add(displacement, next, -1.0, x);
  report.step_norm = kernels::norm(displacement);
  state_.iterate = std::move(next);

  if (report.step_norm < config_.step_tolerance) {
    report.action = StepAction::terminated;
    report.ratio_max = derivative_lipschitz_ratio(samples);
    finished_ = true;
  } else {
    update_parameters(state_, report.gradient, samples, config_, rng_, report);
  }

  ++state_.iteration;
  state_.evaluations = objective_->evaluation_count() - evaluation_base_;
  trace_.push_back({state_.iteration, state_.best_value, report.current_value,
                    sigma_at_step, report.learning_rate, state_.evaluations,
                    report.action});
  return report;
}

MinimizeResult AsgfOptimizer::run() {
  while (!finished_ && state_.iteration < config_.max_iterations) step();
  MinimizeResult result;
  result.best_point = state_.best_point;
  result.best_value = state_.best_value;
  result.trace = trace_;
  result.reason = finished_ ? TerminationReason::step_tolerance
                            : TerminationReason::max_iterations;
  result.evaluations = state_.evaluations;
  return result;
}

MinimizeResult minimize(const Objective& objective, std::span<const double> x0,
                        const AsgfConfig& config, int worker_count) {
  AsgfOptimizer optimizer(objective, Vector(x0.begin(), x0.end()), config,
                          worker_count);
  return optimizer.run();
}

}  // namespace asgf
