#pragma once

#include <utility>

#include "wickrot/lie_algebra.hpp"

namespace wickrot {

/// Symmetric nondegenerate bilinear form on the algebra basis.
struct Metric {
  QMat form;
  bool exact = true;

  int dim() const { return form.rows(); }
  Rational eval(const QVec& x, const QVec& y) const;
};

struct Signature {
  int p = 0;  // positive eigenvalues
  int q = 0;  // negative eigenvalues
};

/// Sylvester counts of the eigenvalues of the form. Throws
/// std::domain_error when some eigenvalue lies within tol of zero.
Signature signature(const Metric& m, double tol = 1e-9);

/// g([x,y],z) + g(y,[x,z]) = 0 on all basis triples, within tol
/// (exactly, for exact data).
bool is_bi_invariant(const LieAlgebra& L, const Metric& m, double tol = 1e-9);
Rational bi_invariance_residual(const LieAlgebra& L, const Metric& m);

enum class ThetaInnerStatus { kOk, kNotInvolution, kNotIsometry };

/// g_theta = g(., theta .) together with its spectrum.
struct ThetaInnerReport {
  ThetaInnerStatus status = ThetaInnerStatus::kOk;
  QMat g_theta;
  std::vector<double> eigenvalues;
  bool positive_definite = false;
};

ThetaInnerReport theta_inner(const Metric& m, const LinearMap& theta, double tol = 1e-9);

/// Basis of o(p,q) in this basis: the kernel of X -> X^T g + g X.
/// Always n(n-1)/2 maps for a nondegenerate form.
std::vector<LinearMap> isometry_algebra_basis(const Metric& m, double tol = 1e-9);

/// Intersection of Der(L) with o(p,q), as a kernel computation on the
/// stacked Leibniz and isometry conditions.
std::vector<LinearMap> derivations_in_isometry_algebra(const LieAlgebra& L, const Metric& m, double tol = 1e-9);

}  // namespace wickrot
