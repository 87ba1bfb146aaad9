#pragma once

#include <span>
#include <vector>

#include "asgf/common.hpp"

namespace asgf {

/// Gauss-Hermite rule for the weight e^{-v²}: an m-point rule integrates
/// polynomials of degree ≤ 2m-1 exactly. Nodes are ascending and exactly
/// antisymmetric about 0; weights are positive and exactly symmetric
/// (mirrored pairs are averaged after the eigensolve).
struct QuadratureRule {
  int point_count = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  /// weights[k] * nodes[k], precomputed for derivative sums.
  std::vector<double> node_weights;
};

inline constexpr int kDefaultMaxQuadraturePoints = 101;

/// Builds the m-point rule via the symmetric tridiagonal Jacobi matrix
/// (Golub-Welsch). Deterministic: identical inputs give bit-identical rules.
/// Throws std::invalid_argument for point_count < 1 or above the cap, where
/// node computation loses stability.
QuadratureRule make_gauss_hermite(int point_count,
                                  int max_point_count = kDefaultMaxQuadraturePoints);

/// Cached, shared rule. The cache is safe for concurrent lookup and the
/// returned rule is immutable, so references may be shared across workers.
const QuadratureRule& gauss_hermite_rule(
    int point_count, int max_point_count = kDefaultMaxQuadraturePoints);

/// Σ weights[k] · samples[k]. Throws on length mismatch.
double integrate(const QuadratureRule& rule, std::span<const double> samples);

}  // namespace asgf
