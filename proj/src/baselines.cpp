#include "asgf/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "asgf/kernels.hpp"
#include "asgf/quadrature.hpp"
#include "asgf/thread_pool.hpp"

namespace asgf {

void EsConfig::validate() const {
  require(sigma > 0.0, "sigma must be positive");
  require(learning_rate >= 0.0, "learning_rate must be nonnegative");
  require(sample_count >= 1, "sample_count must be >= 1");
  require(step_tolerance > 0.0, "step_tolerance must be positive");
  require(max_iterations >= 1, "max_iterations must be positive");
}

void DgsConfig::validate() const {
  require(learning_rate > 0.0, "learning_rate must be positive");
  require(point_count >= 3 && point_count % 2 == 1,
          "point_count must be an odd integer >= 3");
  require(sigma > 0.0, "sigma must be positive");
  require(sigma_decay > 0.0 && sigma_decay <= 1.0, "sigma_decay must be in (0,1]");
  require(step_tolerance > 0.0, "step_tolerance must be positive");
  require(max_iterations >= 1, "max_iterations must be positive");
}

MinimizeResult es_minimize(const Objective& objective, std::span<const double> x0,
                           const EsConfig& config, int worker_count) {
  config.validate();
  const std::size_t d = x0.size();
  if (static_cast<int>(d) != objective.dimension()) {
    throw std::invalid_argument("es_minimize: start point dimension mismatch");
  }

  Rng rng(config.rng_seed);
  ThreadPool pool(worker_count);
  const std::uint64_t base = objective.evaluation_count();
  const int m_count = config.sample_count;

  MinimizeResult result;
  Vector x(x0.begin(), x0.end());
  result.best_point = x;
  result.best_value = objective(x);
  result.reason = TerminationReason::max_iterations;

  Matrix noise(m_count, d);
  Vector values(m_count);
  Vector gradient(d);
  Vector next(d);
  Vector displacement(d);

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    // Draws happen up front on the owner thread so results do not depend on
    // worker scheduling.
    for (int m = 0; m < m_count; ++m) rng.fill_normal(noise.row(m));
    pool.parallel_for(m_count, [&](std::size_t m) {
      Vector point(d);
      kernels::scale_add(point, x, config.sigma, noise.row(m));
      values[m] = objective(point);
    });
    std::fill(gradient.begin(), gradient.end(), 0.0);
    for (int m = 0; m < m_count; ++m) {
      kernels::axpy(gradient, values[m], noise.row(m));
    }
    kernels::scale(gradient, 2.0 / (config.sigma * m_count));

    kernels::scale_add(next, x, -config.learning_rate, gradient);
    const double value = objective(next);
    if (value < result.best_value) {
      result.best_point = next;
      result.best_value = value;
    }
    kernels::scale_add(displacement, next, -1.0, x);
    const double step_norm = kernels::norm(displacement);
    x = next;

    const bool stop = step_norm < config.step_tolerance;
    result.trace.push_back({iter + 1, result.best_value, value, config.sigma,
                            config.learning_rate,
                            objective.evaluation_count() - base,
                            stop ? StepAction::terminated : StepAction::fixed_update});
    if (stop) {
      result.reason = TerminationReason::step_tolerance;
      break;
    }
  }
  result.evaluations = objective.evaluation_count() - base;
  return result;
}

MinimizeResult dgs_minimize(const Objective& objective, std::span<const double> x0,
                            const DgsConfig& config, int worker_count) {
  config.validate();
  const std::size_t d = x0.size();
  if (static_cast<int>(d) != objective.dimension()) {
    throw std::invalid_argument("dgs_minimize: start point dimension mismatch");
  }

  Rng rng(config.rng_seed);
  ThreadPool pool(worker_count);
  const QuadratureRule& rule = gauss_hermite_rule(config.point_count);
  const int center = config.point_count / 2;  // odd rule: node 0 is the iterate
  const std::uint64_t base = objective.evaluation_count();

  MinimizeResult result;
  Vector x(x0.begin(), x0.end());
  result.best_point = x;
  result.best_value = std::numeric_limits<double>::infinity();
  result.reason = TerminationReason::max_iterations;

  double sigma = config.sigma;
  std::vector<DirectionalSample> samples(d);
  Vector next(d);
  Vector displacement(d);

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    Matrix basis = random_orthonormal_basis(static_cast<int>(d), rng);
    const double sigma_at_step = sigma;
    pool.parallel_for(d, [&](std::size_t j) {
      samples[j] =
          directional_derivative(objective, x, sigma_at_step, basis.row(j), rule);
    });
    Vector gradient = assemble_gradient(samples);

    const double current = samples[0].values[center];  // f(x) at this iterate
    if (current < result.best_value) {
      result.best_point = x;
      result.best_value = current;
    }

    kernels::scale_add(next, x, -config.learning_rate, gradient);
    kernels::scale_add(displacement, next, -1.0, x);
    const double step_norm = kernels::norm(displacement);
    x = next;
    sigma *= 1.0 - config.sigma_decay;

    const bool stop = step_norm < config.step_tolerance || sigma <= 0.0;
    result.trace.push_back({iter + 1, result.best_value, current, sigma_at_step,
                            config.learning_rate,
                            objective.evaluation_count() - base,
                            stop ? StepAction::terminated : StepAction::fixed_update});
    if (stop) {
      result.reason = TerminationReason::step_tolerance;
      break;
    }
  }
  result.evaluations = objective.evaluation_count() - base;
  return result;
}

}  // namespace asgf
