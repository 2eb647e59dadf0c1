#include "wickrot/soliton.hpp"

#include <algorithm>

namespace wickrot {

const char* soliton_class_name(SolitonClass c) {
  switch (c) {
    case SolitonClass::kEinstein: return "einstein";
    case SolitonClass::kNilsoliton: return "nilsoliton";
    case SolitonClass::kSolsoliton: return "solsoliton";
    case SolitonClass::kAlgebraicSoliton: return "algebraic_soliton";
    case SolitonClass::kNone: return "none";
  }
  return "none";
}

namespace {

QVec vec_of(const QMat& m) {
  QVec v;
  v.reserve(m.a_.size());
  for (const auto& x : m.a_) v.push_back(x);
  return v;
}

}  // namespace

SolitonDecomposition soliton_decompose(const LieAlgebra& L, const Metric& m, double tol) {
  int n = L.dim();
  CurvatureData cd = curvature(L, m);
  SolitonDecomposition out;
  out.exact = cd.exact;
  out.lambda = 0;
  out.derivation = LinearMap{QMat::zero(n, n), MapRole::kDerivation, cd.exact};
  out.residual = 0;

  if (L.is_abelian()) {
    // Every map is a derivation; report the minimal-norm split (0, 0).
    out.residual = cd.ricci_operator.max_abs();
    bool ok = cd.exact ? out.residual == 0 : out.residual_double() <= tol;
    out.classification = ok ? SolitonClass::kEinstein : SolitonClass::kNone;
    return out;
  }

  std::vector<LinearMap> ders = derivation_algebra(L, tol);
  int d = static_cast<int>(ders.size());
  QMat a(n * n, d + 1);
  a.set_col(0, vec_of(QMat::identity(n)));
  for (int i = 0; i < d; ++i) a.set_col(i + 1, vec_of(ders[static_cast<std::size_t>(i)].mat));
  QVec b = vec_of(cd.ricci_operator);

  // Normal equations; A has full column rank since I is not a derivation
  // of a non-abelian algebra.
  QMat at = a.transpose();
  QVec x = solve(at * a, at.apply(b));

  out.lambda = x[0];
  QMat dmat(n, n);
  for (int i = 0; i < d; ++i) {
    if (x[static_cast<std::size_t>(i + 1)] == 0) continue;
    dmat = dmat + ders[static_cast<std::size_t>(i)].mat * x[static_cast<std::size_t>(i + 1)];
  }
  out.derivation = LinearMap{dmat, MapRole::kDerivation, cd.exact};
  out.residual = (cd.ricci_operator - QMat::identity(n) * out.lambda - dmat).max_abs();

  bool ok = cd.exact ? out.residual == 0 : out.residual_double() <= tol;
  if (!ok) {
    out.classification = SolitonClass::kNone;
    return out;
  }
  bool d_zero = cd.exact ? dmat.is_zero() : to_double(dmat.max_abs()) <= tol;
  if (d_zero) {
    out.classification = SolitonClass::kEinstein;
  } else {
    StructuralReport sr = structural_classify(L, tol);
    out.classification = sr.nilpotent    ? SolitonClass::kNilsoliton
                         : sr.solvable   ? SolitonClass::kSolsoliton
                                         : SolitonClass::kAlgebraicSoliton;
  }
  return out;
}

SolitonWickReport soliton_wick_invariance(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol) {
  SolitonWickReport rep;
  WickResult w = wick_rotate(L, m, theta, tol);
  rep.source = soliton_decompose(L, m, tol);
  rep.rotated = soliton_decompose(w.algebra, w.metric, tol);

  Rational dl = rat_abs(rep.source.lambda - rep.rotated.lambda);
  rep.lambda_equal = rep.source.exact && rep.rotated.exact ? dl == 0 : to_double(dl) <= tol;

  // D survives the twist exactly when it respects the eigenspace split;
  // then its matrix on the adapted basis is the plain change of basis.
  const QMat& dmat = rep.source.derivation.mat;
  QMat theta_comm = theta.mat * dmat - dmat * theta.mat;
  bool commutes = rep.source.exact ? theta_comm.is_zero() : to_double(theta_comm.max_abs()) <= tol;
  if (commutes) {
    QMat transported = solve(w.basis_map, dmat * w.basis_map);
    rep.derivation_mismatch = (transported - rep.rotated.derivation.mat).max_abs();
    rep.derivation_transported = rep.source.exact && rep.rotated.exact ? rep.derivation_mismatch == 0
                                                                       : to_double(rep.derivation_mismatch) <= tol;
  } else {
    rep.derivation_mismatch = theta_comm.max_abs();
    rep.derivation_transported = false;
  }
  return rep;
}

bool check_theta_commutes(const LinearMap& theta, const LinearMap& d, double tol) {
  if (theta.dim() != d.dim()) throw std::invalid_argument("check_theta_commutes: shape mismatch");
  QMat comm = theta.mat * d.mat - d.mat * theta.mat;
  return theta.exact && d.exact ? comm.is_zero() : to_double(comm.max_abs()) <= tol;
}

double EquivarianceReport::max_residual_double() const {
  Rational m = std::max(std::max(connection, riemann), std::max(ricci_tensor, ricci_operator_commutator));
  return to_double(m);
}

EquivarianceReport equivariance_report(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol) {
  int n = L.dim();
  bool exact = L.exact() && m.exact && theta.exact;
  const QMat& t = theta.mat;
  {
    QMat invol = t * t - QMat::identity(n);
    QMat iso = t.transpose() * m.form * t - m.form;
    bool ok = exact ? invol.is_zero() && iso.is_zero()
                    : to_double(invol.max_abs()) <= tol && to_double(iso.max_abs()) <= tol;
    if (!ok) throw std::invalid_argument("equivariance_report: theta must be an isometric involution");
  }

  CurvatureData cd = curvature(L, m);
  EquivarianceReport rep;

  // theta . nabla = nabla: theta nabla_{theta e_i} (theta .) = nabla_{e_i}.
  rep.connection = 0;
  for (int i = 0; i < n; ++i) {
    QMat mixed(n, n);
    for (int a = 0; a < n; ++a) {
      if (t(a, i) == 0) continue;
      mixed = mixed + cd.gamma[static_cast<std::size_t>(a)] * t(a, i);
    }
    rep.connection = std::max(rep.connection, (t * mixed * t - cd.gamma[static_cast<std::size_t>(i)]).max_abs());
  }

  // theta . R = R: theta R(theta e_i, theta e_j)(theta .) = R(e_i, e_j).
  rep.riemann = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QMat racted(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Rational w = t(a, i) * t(b, j);
          if (w == 0 || a == b) continue;
          racted = racted + cd.riemann_op(a, b) * w;
        }
      rep.riemann = std::max(rep.riemann, (t * racted * t - cd.riemann_op(i, j)).max_abs());
    }

  rep.ricci_tensor = (t.transpose() * cd.ricci_tensor * t - cd.ricci_tensor).max_abs();
  rep.ricci_operator_commutator = (t * cd.ricci_operator - cd.ricci_operator * t).max_abs();
  rep.rpe = exact ? rep.riemann == 0 : to_double(rep.riemann) < tol;
  return rep;
}

}  // namespace wickrot
