#pragma once

#include "wickrot/metric.hpp"

namespace wickrot {

/// Connection and curvature of the left-invariant metric at the identity.
///
/// Conventions, fixed once for the whole project:
///   R(x,y)z   = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
///   ric(x,y)  = Tr(z -> R(z,y) x)
///   Ric       = g^{-1} ric  (the g-self-adjoint operator with
///               g(Ric x, y) = ric(x, y))
struct CurvatureData {
  int n = 0;
  bool exact = true;
  std::vector<QMat> gamma;    // gamma[i] = matrix of nabla_{e_i}
  std::vector<QMat> riemann;  // pair-indexed R(e_i, e_j) for i < j
  QMat ricci_tensor;
  QMat ricci_operator;
  Rational scalar;

  /// R(e_i, e_j) as an operator, any i, j (signed lookup).
  QMat riemann_op(int i, int j) const;
};

/// Levi-Civita connection via the Koszul formula on the basis:
/// 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
/// Exact for rational inputs. Throws std::domain_error on degenerate metrics.
std::vector<QMat> levi_civita(const LieAlgebra& L, const Metric& m);

CurvatureData curvature(const LieAlgebra& L, const Metric& m);

}  // namespace wickrot
