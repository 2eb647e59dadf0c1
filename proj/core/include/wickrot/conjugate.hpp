#pragma once

#include "wickrot/git_flow.hpp"

namespace wickrot {

/// phi with phi theta1 phi^{-1} = theta2, phi = exp(x/2) for x in o(p,q)
/// anticommuting with theta1. The exponential form certifies membership
/// in the identity component.
struct MetricConjugacy {
  Eigen::MatrixXd phi;
  Eigen::MatrixXd x;
  double conjugation_residual = 0.0;
  double isometry_residual = 0.0;
};

/// Closed-form conjugator between two metric Cartan involutions: theta2
/// theta1 is positive in the theta1 inner product, and the square root of
/// that element does the job. Throws std::invalid_argument when either
/// input fails the metric Cartan flags.
MetricConjugacy conjugate_metric_cartan(const Metric& m, const LinearMap& theta1, const LinearMap& theta2,
                                        double tol = 1e-9);

struct LieConjugacy {
  Eigen::MatrixXd phi;               // exp(sum c_i K_i)
  Eigen::VectorXd coefficients;
  std::vector<QMat> generators;      // basis of Der(L) cap o(p,q)
  double conjugation_residual = 0.0;
  double isometry_residual = 0.0;
  double automorphism_residual = 0.0;
};

/// Search for a conjugator inside Aut(L)_0 cap O(p,q)_0, parametrized as
/// a single exponential of Der(L) cap o(p,q). Existence is guaranteed for
/// genuine Lie Cartan pairs; an empty result is a budget statement, not a
/// counterexample. Throws std::invalid_argument when an input is not a
/// Lie Cartan involution.
std::optional<LieConjugacy> conjugate_lie_cartan(const LieAlgebra& L, const Metric& m, const LinearMap& theta1,
                                                 const LinearMap& theta2, SearchBudget budget = {16, 500},
                                                 std::uint64_t seed = 1, double tol = 1e-9);

}  // namespace wickrot
