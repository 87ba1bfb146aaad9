#include "asgf/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "asgf/kernels.hpp"

namespace asgf {

QuadratureRule make_gauss_hermite(int point_count, int max_point_count) {
  if (point_count < 1) {
    throw std::invalid_argument("gauss_hermite: point_count must be >= 1, got " +
                                std::to_string(point_count));
  }
  if (point_count > max_point_count) {
    throw std::invalid_argument("gauss_hermite: point_count " +
                                std::to_string(point_count) + " exceeds cap " +
                                std::to_string(max_point_count));
  }

  const int m = point_count;
  // Jacobi matrix for Hermite polynomials (weight e^{-v²}): zero diagonal,
  // off-diagonal sqrt(k/2). Eigenvalues are the nodes; the squared first
  // eigenvector components carry the weights (total mass √π).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(0.5 * k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_hermite: tridiagonal eigensolve failed for m = " +
                             std::to_string(m));
  }

  QuadratureRule rule;
  rule.point_count = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int k = 0; k < m; ++k) {
    rule.nodes[k] = solver.eigenvalues()[k];  // ascending
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = kSqrtPi * v0 * v0;
  }

  // Enforce exact symmetry: p_k = -p_{m-1-k}, w_k = w_{m-1-k}, center node 0.
  for (int k = 0; k < m / 2; ++k) {
    const int j = m - 1 - k;
    const double p = 0.5 * (rule.nodes[k] - rule.nodes[j]);
    rule.nodes[k] = p;
    rule.nodes[j] = -p;
    const double w = 0.5 * (rule.weights[k] + rule.weights[j]);
    rule.weights[k] = w;
    rule.weights[j] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;

  rule.node_weights.resize(m);
  for (int k = 0; k < m; ++k) rule.node_weights[k] = rule.weights[k] * rule.nodes[k];
  return rule;
}

const QuadratureRule& gauss_hermite_rule(int point_count, int max_point_count) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;

  if (point_count > max_point_count) {
    throw std::invalid_argument("gauss_hermite: point_count " +
                                std::to_string(point_count) + " exceeds cap " +
                                std::to_string(max_point_count));
  }
  std::lock_guard lock(mutex);
  auto it = cache.find(point_count);
  if (it == cache.end()) {
    auto rule = std::make_unique<const QuadratureRule>(
        make_gauss_hermite(point_count, max_point_count));
    it = cache.emplace(point_count, std::move(rule)).first;
  }
  return *it->second;
}

double integrate(const QuadratureRule& rule, std::span<const double> samples) {
  if (samples.size() != rule.weights.size()) {
    throw std::invalid_argument(
        "integrate: sample count " + std::to_string(samples.size()) +
        " does not match rule point count " + std::to_string(rule.point_count));
  }
  return kernels::dot(rule.weights, samples);
}

}  // namespace asgf
