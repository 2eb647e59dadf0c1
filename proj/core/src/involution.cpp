#include "wickrot/involution.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace wickrot {

Involution is_metric_cartan(const Metric& m, const LinearMap& theta, double tol) {
  Involution iv;
  iv.map = theta;
  bool exact = m.exact && theta.exact;
  int n = m.dim();

  QMat invol = theta.mat * theta.mat - QMat::identity(n);
  iv.is_involution = (exact ? invol.is_zero() : to_double(invol.max_abs()) <= tol) ? Tri::kTrue : Tri::kFalse;

  QMat iso = theta.mat.transpose() * m.form * theta.mat - m.form;
  iv.is_metric_isometry = (exact ? iso.is_zero() : to_double(iso.max_abs()) <= tol) ? Tri::kTrue : Tri::kFalse;

  // Spectrum of g(., theta .); recorded as evidence either way.
  QMat gt = m.form * theta.mat;
  QMat sym = (gt + gt.transpose()) * Rational(1, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym.to_double());
  iv.g_theta_eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  bool pos = true;
  for (double ev : iv.g_theta_eigenvalues)
    if (ev <= tol) pos = false;
  iv.g_theta_positive = pos ? Tri::kTrue : Tri::kFalse;
  return iv;
}

Involution is_lie_cartan(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol) {
  Involution iv = is_metric_cartan(m, theta, tol);
  Rational res = wickrot::automorphism_residual(L, theta.mat);
  iv.automorphism_residual = to_double(res);
  bool ok = (L.exact() && theta.exact) ? res == 0 : iv.automorphism_residual <= tol;
  iv.is_automorphism = ok ? Tri::kTrue : Tri::kFalse;
  return iv;
}

CartanDecomposition cartan_decomposition(const LinearMap& theta, double tol) {
  int n = theta.dim();
  CartanDecomposition cd;
  if (theta.exact) {
    QMat sq = theta.mat * theta.mat - QMat::identity(n);
    if (!sq.is_zero()) throw std::domain_error("cartan_decomposition: map is not an involution");
    cd.t_basis = nullspace(theta.mat - QMat::identity(n));
    cd.p_basis = nullspace(theta.mat + QMat::identity(n));
  } else {
    Eigen::MatrixXd t = theta.mat.to_double();
    if (((t * t) - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
      throw std::domain_error("cartan_decomposition: map is not an involution");
    auto span_of = [&](const Eigen::MatrixXd& proj) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeFullU);
      int r = 0;
      for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > tol) ++r;
      return QMat::from_double(svd.matrixU().leftCols(r));
    };
    cd.t_basis = span_of(0.5 * (Eigen::MatrixXd::Identity(n, n) + t));
    cd.p_basis = span_of(0.5 * (Eigen::MatrixXd::Identity(n, n) - t));
  }
  if (cd.t_dim() + cd.p_dim() != n) throw std::domain_error("cartan_decomposition: eigenspaces do not fill the space");
  return cd;
}

bool is_killing_cartan(const LieAlgebra& L, const LinearMap& theta, double tol) {
  Metric minus_kappa{-killing_form(L), L.exact()};
  try {
    signature(minus_kappa, tol);
  } catch (const std::domain_error&) {
    throw std::domain_error("is_killing_cartan: Killing form degenerate (algebra not semisimple)");
  }
  Involution iv = is_lie_cartan(L, minus_kappa, theta, tol);
  return iv.lie_cartan();
}

}  // namespace wickrot
