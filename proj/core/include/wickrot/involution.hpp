#pragma once

#include "wickrot/curvature.hpp"
#include "wickrot/metric.hpp"

namespace wickrot {

enum class Tri { kTrue, kFalse, kUnchecked };

inline bool tri_true(Tri t) { return t == Tri::kTrue; }

/// Candidate involution with its verification state. A metric Cartan
/// involution has the first three flags true; a Lie Cartan involution is
/// additionally an automorphism of the bracket.
struct Involution {
  LinearMap map;
  Tri is_involution = Tri::kUnchecked;
  Tri is_metric_isometry = Tri::kUnchecked;
  Tri g_theta_positive = Tri::kUnchecked;
  Tri is_automorphism = Tri::kUnchecked;

  // Evidence.
  std::vector<double> g_theta_eigenvalues;
  double automorphism_residual = 0.0;

  bool metric_cartan() const {
    return tri_true(is_involution) && tri_true(is_metric_isometry) && tri_true(g_theta_positive);
  }
  bool lie_cartan() const { return metric_cartan() && tri_true(is_automorphism); }
};

/// +1 / -1 eigenspace bases of an involution, as column blocks.
struct CartanDecomposition {
  QMat t_basis;
  QMat p_basis;
  int t_dim() const { return t_basis.cols(); }
  int p_dim() const { return p_basis.cols(); }
};

/// Fills the metric-level flags (involution, isometry, positivity of
/// g_theta); never throws, failures land in the flags with the g_theta
/// spectrum as evidence.
Involution is_metric_cartan(const Metric& m, const LinearMap& theta, double tol = 1e-9);

/// All flags, including automorphism.
Involution is_lie_cartan(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol = 1e-9);

/// Eigenspace split of an involution. Exact kernels for exact maps, SVD
/// projector ranks otherwise. Throws std::domain_error when theta^2 != 1.
CartanDecomposition cartan_decomposition(const LinearMap& theta, double tol = 1e-9);

/// theta is an automorphism and -kappa(., theta .) is positive definite.
/// Throws std::domain_error when the Killing form is degenerate.
bool is_killing_cartan(const LieAlgebra& L, const LinearMap& theta, double tol = 1e-9);

}  // namespace wickrot
