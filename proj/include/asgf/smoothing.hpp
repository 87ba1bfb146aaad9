#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "asgf/common.hpp"
#include "asgf/quadrature.hpp"
#include "asgf/rng.hpp"

namespace asgf {

/// A black-box target function with an evaluation counter. The counter is
/// atomic and the wrapped function must tolerate concurrent calls; it is
/// bumped exactly once per call, before the call, so failed evaluations are
/// still accounted for. Non-finite results raise NonFiniteValueError and
/// other failures are rethrown wrapped in EvaluationError with the point
/// attached.
class Objective {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  Objective(int dimension, EvalFn fn, std::string name = {});

  double operator()(std::span<const double> x) const;

  int dimension() const { return dimension_; }
  const std::string& name() const { return name_; }

  std::uint64_t evaluation_count() const {
    return evaluations_.load(std::memory_order_relaxed);
  }
  void reset_evaluation_count() { evaluations_.store(0, std::memory_order_relaxed); }

 private:
  int dimension_;
  EvalFn fn_;
  std::string name_;
  mutable std::atomic<std::uint64_t> evaluations_{0};
};

/// Everything learned from sampling the objective along one direction:
/// the raw values (ascending node order) feed both the smoothed derivative
/// and the local Lipschitz estimate, so one evaluation batch serves both.
struct DirectionalSample {
  Vector direction;                  // unit vector
  int point_count = 0;
  Vector values;                     // f(x + σ·p_k·ξ), ascending node order
  double derivative_estimate = 0.0;  // smoothed directional derivative
  double lipschitz_estimate = 0.0;   // max consecutive difference quotient; 0 if m < 2
  bool converged = true;             // false when adaptive refinement hit its cap
  std::uint64_t evaluations_used = 0;  // total objective calls behind this sample
};

/// Smoothed directional derivative (2/(σ√π)) Σ w_k p_k f(x + σ p_k ξ).
/// Makes exactly rule.point_count objective calls and fills the Lipschitz
/// estimate from the same values.
DirectionalSample directional_derivative(const Objective& objective,
                                         std::span<const double> x, double sigma,
                                         std::span<const double> direction,
                                         const QuadratureRule& rule);

/// Max over consecutive nodes of |Δf| / (σ·Δp). Requires point_count ≥ 2.
double local_lipschitz(const DirectionalSample& sample, double sigma,
                       const QuadratureRule& rule);

/// Σ_j derivative_j · ξ_j over an orthonormal set of d samples. Throws if
/// the directions' Gram matrix deviates from identity beyond 1e-6.
Vector assemble_gradient(std::span<const DirectionalSample> samples);

/// Monte Carlo smoothed-gradient baseline: (2/(σM)) Σ ε_m f(x + σ ε_m) with
/// standard Gaussian ε_m. Consumes exactly sample_count objective calls.
Vector mc_gradient(const Objective& objective, std::span<const double> x,
                   double sigma, int sample_count, Rng& rng);

/// Antithetic orthogonal baseline: (1/(σM)) Σ ε_j (f(x+σε_j) − f(x−σε_j)),
/// where each consecutive block of up to d directions is orthogonalized
/// (Gram-Schmidt on Gaussian draws, norms redrawn from the chi distribution).
/// Consumes exactly 2·sample_count objective calls.
Vector orthogonal_antithetic_gradient(const Objective& objective,
                                      std::span<const double> x, double sigma,
                                      int sample_count, Rng& rng);

namespace detail {

/// Gram-Schmidt on rows [first_row, row_count) of `rows` against all earlier
/// rows and each other, with a second projection pass for accuracy.
/// Near-zero leftovers are redrawn from rng. Rows below first_row are
/// treated as already orthonormal and never touched.
void orthonormalize_rows(Matrix& rows, std::size_t first_row, std::size_t row_count,
                         Rng& rng);

}  // namespace detail

}  // namespace asgf
