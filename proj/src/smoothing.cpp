#include "asgf/smoothing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "asgf/kernels.hpp"

namespace asgf {

namespace {

constexpr double kUnitNormTolerance = 1e-10;
constexpr double kGramTolerance = 1e-6;

void check_direction(const Objective& objective, std::span<const double> x,
                     std::span<const double> direction, double sigma) {
  require(sigma > 0.0, "sigma must be positive");
  if (static_cast<int>(x.size()) != objective.dimension() ||
      direction.size() != x.size()) {
    throw std::invalid_argument("directional sample: dimension mismatch");
  }
  if (std::abs(kernels::norm(direction) - 1.0) > kUnitNormTolerance) {
    throw std::invalid_argument("direction must be unit-norm");
  }
}

}  // namespace

Objective::Objective(int dimension, EvalFn fn, std::string name)
    : dimension_(dimension), fn_(std::move(fn)), name_(std::move(name)) {
  require(dimension_ >= 1, "objective dimension must be positive");
  require(static_cast<bool>(fn_), "objective function must be callable");
}

double Objective::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    throw std::invalid_argument("objective: expected dimension " +
                                std::to_string(dimension_) + ", got " +
                                std::to_string(x.size()));
  }
  evaluations_.fetch_add(1, std::memory_order_relaxed);
  double value;
  try {
    value = fn_(x);
  } catch (...) {
    std::throw_with_nested(
        EvaluationError("objective evaluation failed", Vector(x.begin(), x.end())));
  }
  if (!std::isfinite(value)) {
    throw NonFiniteValueError(Vector(x.begin(), x.end()), value);
  }
  return value;
}

DirectionalSample directional_derivative(const Objective& objective,
                                         std::span<const double> x, double sigma,
                                         std::span<const double> direction,
                                         const QuadratureRule& rule) {
  check_direction(objective, x, direction, sigma);

  DirectionalSample sample;
  sample.direction.assign(direction.begin(), direction.end());
  sample.point_count = rule.point_count;
  sample.values.resize(rule.point_count);

  Vector point(x.size());
  for (int k = 0; k < rule.point_count; ++k) {
    kernels::scale_add(point, x, sigma * rule.nodes[k], direction);
    sample.values[k] = objective(point);
  }

  sample.derivative_estimate =
      2.0 / (sigma * kSqrtPi) * kernels::dot(rule.node_weights, sample.values);
  sample.lipschitz_estimate =
      rule.point_count >= 2 ? local_lipschitz(sample, sigma, rule) : 0.0;
  sample.evaluations_used = static_cast<std::uint64_t>(rule.point_count);
  return sample;
}

double local_lipschitz(const DirectionalSample& sample, double sigma,
                       const QuadratureRule& rule) {
  require(sigma > 0.0, "sigma must be positive");
  if (rule.point_count < 2) {
    throw std::invalid_argument(
        "local_lipschitz: needs at least 2 quadrature points");
  }
  if (sample.values.size() != rule.nodes.size()) {
    throw std::invalid_argument("local_lipschitz: sample/rule size mismatch");
  }
  double max_slope = 0.0;
  for (int k = 0; k + 1 < rule.point_count; ++k) {
    const double slope = std::abs(sample.values[k + 1] - sample.values[k]) /
                         (sigma * (rule.nodes[k + 1] - rule.nodes[k]));
    if (slope > max_slope) max_slope = slope;
  }
  return max_slope;
}

Vector assemble_gradient(std::span<const DirectionalSample> samples) {
  require(!samples.empty(), "assemble_gradient: no samples");
  const std::size_t d = samples.size();
  for (const DirectionalSample& s : samples) {
    if (s.direction.size() != d) {
      throw std::invalid_argument(
          "assemble_gradient: need exactly d samples of dimension d");
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double g = kernels::dot(samples[i].direction, samples[j].direction);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kGramTolerance) {
        throw std::invalid_argument(
            "assemble_gradient: directions are not orthonormal");
      }
    }
  }
  Vector gradient(d, 0.0);
  for (const DirectionalSample& s : samples) {
    kernels::axpy(gradient, s.derivative_estimate, s.direction);
  }
  return gradient;
}

Vector mc_gradient(const Objective& objective, std::span<const double> x,
                   double sigma, int sample_count, Rng& rng) {
  require(sigma > 0.0, "sigma must be positive");
  require(sample_count >= 1, "sample_count must be >= 1");
  const std::size_t d = x.size();
  Vector gradient(d, 0.0);
  Vector noise(d);
  Vector point(d);
  for (int m = 0; m < sample_count; ++m) {
    rng.fill_normal(noise);
    kernels::scale_add(point, x, sigma, noise);
    const double value = objective(point);
    kernels::axpy(gradient, value, noise);
  }
  kernels::scale(gradient, 2.0 / (sigma * sample_count));
  return gradient;
}

namespace detail {

void orthonormalize_rows(Matrix& rows, std::size_t first_row, std::size_t row_count,
                         Rng& rng) {
  const std::size_t d = rows.cols();
  for (std::size_t i = first_row; i < row_count; ++i) {
    auto row = rows.row(i);
    for (;;) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < i; ++j) {
          kernels::axpy(row, -kernels::dot(row, rows.row(j)), rows.row(j));
        }
      }
      const double n = kernels::norm(row);
      if (n > 1e-12 * std::sqrt(static_cast<double>(d))) {
        kernels::scale(row, 1.0 / n);
        break;
      }
      rng.fill_normal(row);
    }
  }
}

}  // namespace detail

Vector orthogonal_antithetic_gradient(const Objective& objective,
                                      std::span<const double> x, double sigma,
                                      int sample_count, Rng& rng) {
  require(sigma > 0.0, "sigma must be positive");
  require(sample_count >= 1, "sample_count must be >= 1");
  const std::size_t d = x.size();

  Vector gradient(d, 0.0);
  Vector scaled(d);
  Vector plus(d);
  Vector minus(d);
  Matrix block(d, d);

  int remaining = sample_count;
  while (remaining > 0) {
    const std::size_t block_size = std::min<std::size_t>(d, remaining);
    for (std::size_t j = 0; j < block_size; ++j) rng.fill_normal(block.row(j));
    detail::orthonormalize_rows(block, 0, block_size, rng);
    for (std::size_t j = 0; j < block_size; ++j) {
      // Norm redrawn from the chi distribution so ε keeps Gaussian marginals.
      const double radius = std::sqrt(kernels::sum_sq(rng.normal_vector(d)));
      kernels::scale(block.row(j), radius);
      kernels::scale_add(plus, x, sigma, block.row(j));
      kernels::scale_add(minus, x, -sigma, block.row(j));
      const double delta = objective(plus) - objective(minus);
      kernels::axpy(gradient, delta, block.row(j));
    }
    remaining -= static_cast<int>(block_size);
  }
  kernels::scale(gradient, 1.0 / (sigma * sample_count));
  return gradient;
}

}  // namespace asgf
