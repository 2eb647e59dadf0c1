#pragma once

#include "wickrot/wick.hpp"

namespace wickrot {

enum class SolitonClass { kEinstein, kNilsoliton, kSolsoliton, kAlgebraicSoliton, kNone };

const char* soliton_class_name(SolitonClass c);

/// Ric = lambda I + D with D a derivation. Unique for non-abelian
/// algebras; abelian ones get the minimal-norm decomposition (0, 0).
struct SolitonDecomposition {
  SolitonClass classification = SolitonClass::kNone;
  Rational lambda;
  LinearMap derivation;
  Rational residual;  // ||Ric - lambda I - D||, exact on the exact path
  bool exact = true;

  bool accepted() const { return classification != SolitonClass::kNone; }
  double lambda_double() const { return to_double(lambda); }
  double residual_double() const { return to_double(residual); }
};

/// Least-squares split of the Ricci operator over I and the derivation
/// basis, solved exactly through the normal equations for exact inputs.
SolitonDecomposition soliton_decompose(const LieAlgebra& L, const Metric& m, double tol = 1e-8);

struct SolitonWickReport {
  SolitonDecomposition source;
  SolitonDecomposition rotated;
  bool lambda_equal = false;
  bool derivation_transported = false;  // D block-diagonal and mapped to D-tilde
  Rational derivation_mismatch;         // max abs entry difference after transport
};

/// Decomposes both sides of a Wick rotation and checks that lambda agrees
/// and D is carried onto the rotated derivation by the adapted basis.
SolitonWickReport soliton_wick_invariance(const LieAlgebra& L, const Metric& m, const LinearMap& theta,
                                          double tol = 1e-8);

bool check_theta_commutes(const LinearMap& theta, const LinearMap& d, double tol = 1e-10);

/// Residuals of the isometry action of theta on the curvature package:
/// zero residuals mean theta fixes the connection, the Ricci tensor, the
/// Ricci operator and the Riemann tensor.
struct EquivarianceReport {
  Rational connection;
  Rational riemann;
  Rational ricci_tensor;
  Rational ricci_operator_commutator;
  bool rpe = false;  // Riemann purely electric w.r.t. the supplied theta

  double max_residual_double() const;
};

/// Requires theta to be an isometric involution (throws otherwise).
EquivarianceReport equivariance_report(const LieAlgebra& L, const Metric& m, const LinearMap& theta,
                                       double tol = 1e-9);

}  // namespace wickrot
