#pragma once

#include "wickrot/involution.hpp"

namespace wickrot {

/// Result of the real twist t + i p along an involution theta.
///
/// basis_map columns are the adapted basis in source coordinates: the
/// +1 eigenvectors first (t block, kept real), then the -1 eigenvectors
/// (p block, multiplied by i in the twist). The rotated algebra and
/// metric are expressed on that basis with the i's folded into real
/// sign rules, so no complex arithmetic ever appears.
struct WickResult {
  LieAlgebra algebra;
  Metric metric;
  QMat basis_map;
  int t_dim = 0;
};

/// Twist rules on the adapted basis (t_a real, q_b = i p_b):
///   [t,t'] unchanged, [t,q] keeps its coefficients read in the q basis,
///   [q,q'] = -[p,p'] (lands in t), metric blocks g|t and -g|p, cross 0.
///
/// theta must be an involutive automorphism preserving m; it does not
/// have to be Cartan, so rotations between two indefinite signatures are
/// allowed. Throws std::invalid_argument when a precondition fails.
WickResult wick_rotate(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol = 1e-9);

/// The involution the twist induces on the rotated algebra: +1 on the t
/// block, -1 on the q block.
LinearMap induced_involution(const WickResult& w);

/// Applying the twist twice with the induced involution reproduces the
/// source algebra and metric on the mapped basis, exactly for exact
/// inputs.
bool involutivity_double_wick(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol = 1e-9);

}  // namespace wickrot
