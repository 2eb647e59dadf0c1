#include "wickrot/metric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace wickrot {

Rational Metric::eval(const QVec& x, const QVec& y) const {
  Rational s = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < dim(); ++j) s += x[static_cast<std::size_t>(i)] * form(i, j) * y[static_cast<std::size_t>(j)];
  }
  return s;
}

Signature signature(const Metric& m, double tol) {
  if (!m.form.is_symmetric()) throw std::invalid_argument("signature: form not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.form.to_double());
  Signature s;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= tol) throw std::domain_error("signature: degenerate metric (eigenvalue within tol of zero)");
    (ev > 0 ? s.p : s.q)++;
  }
  return s;
}

Rational bi_invariance_residual(const LieAlgebra& L, const Metric& m) {
  int n = L.dim();
  Rational worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVec ei = qvec_unit(n, i), ej = qvec_unit(n, j), ek = qvec_unit(n, k);
        Rational r = m.eval(L.bracket(ei, ej), ek) + m.eval(ej, L.bracket(ei, ek));
        worst = std::max(worst, rat_abs(r));
      }
  return worst;
}

bool is_bi_invariant(const LieAlgebra& L, const Metric& m, double tol) {
  Rational r = bi_invariance_residual(L, m);
  return (L.exact() && m.exact) ? r == 0 : to_double(r) <= tol;
}

ThetaInnerReport theta_inner(const Metric& m, const LinearMap& theta, double tol) {
  ThetaInnerReport rep;
  const QMat& t = theta.mat;
  int n = m.dim();
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("theta_inner: shape mismatch");

  bool exact = m.exact && theta.exact;
  QMat invol = t * t - QMat::identity(n);
  bool involution_ok = exact ? invol.is_zero() : to_double(invol.max_abs()) <= tol;
  if (!involution_ok) {
    rep.status = ThetaInnerStatus::kNotInvolution;
    return rep;
  }
  QMat iso = t.transpose() * m.form * t - m.form;
  bool isometry_ok = exact ? iso.is_zero() : to_double(iso.max_abs()) <= tol;
  if (!isometry_ok) {
    rep.status = ThetaInnerStatus::kNotIsometry;
    return rep;
  }

  rep.g_theta = m.form * t;  // symmetric once theta is an isometric involution
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.g_theta.to_double());
  rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  rep.positive_definite = true;
  for (double ev : rep.eigenvalues)
    if (ev <= tol) rep.positive_definite = false;
  return rep;
}

namespace {

// Rows of the condition X^T g + g X = 0 on the n^2 unknowns X_{ab}.
QMat isometry_condition(const QMat& g) {
  int n = g.rows();
  QMat sys(n * (n + 1) / 2, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++row)
      for (int a = 0; a < n; ++a) {
        sys(row, a * n + i) += g(a, j);  // (X^T g)_{ij} = sum_a X_{ai} g_{aj}
        sys(row, a * n + j) += g(i, a);  // (g X)_{ij}   = sum_a g_{ia} X_{aj}
      }
  return sys;
}

QMat kernel_for(const QMat& sys, bool exact, double tol) {
  if (exact) return nullspace(sys);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.to_double(), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * std::max(1.0, smax)) ++r;
  return QMat::from_double(svd.matrixV().rightCols(svd.matrixV().cols() - r));
}

std::vector<LinearMap> reshape_kernel(const QMat& basis, int n, bool exact, MapRole role) {
  std::vector<LinearMap> out;
  for (int c = 0; c < basis.cols(); ++c) {
    QMat x(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) x(a, b) = basis(a * n + b, c);
    out.push_back(LinearMap{x, role, exact});
  }
  return out;
}

}  // namespace

std::vector<LinearMap> isometry_algebra_basis(const Metric& m, double tol) {
  QMat sys = isometry_condition(m.form);
  QMat basis = kernel_for(sys, m.exact, tol);
  return reshape_kernel(basis, m.dim(), m.exact, MapRole::kEndomorphism);
}

std::vector<LinearMap> derivations_in_isometry_algebra(const LieAlgebra& L, const Metric& m, double tol) {
  int n = L.dim();
  QMat iso = isometry_condition(m.form);
  // Stack the Leibniz rows on top of the isometry rows.
  QMat leib(LieAlgebra::pair_count(n) * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = 0; l < n; ++l, ++row)
        for (int a = 0; a < n; ++a) {
          leib(row, l * n + a) += L.c(i, j, a);
          leib(row, a * n + i) -= L.c(a, j, l);
          leib(row, a * n + j) -= L.c(i, a, l);
        }
  QMat sys(iso.rows() + leib.rows(), n * n);
  for (int r = 0; r < iso.rows(); ++r)
    for (int c2 = 0; c2 < n * n; ++c2) sys(r, c2) = iso(r, c2);
  for (int r = 0; r < leib.rows(); ++r)
    for (int c2 = 0; c2 < n * n; ++c2) sys(iso.rows() + r, c2) = leib(r, c2);
  bool exact = L.exact() && m.exact;
  QMat basis = kernel_for(sys, exact, tol);
  return reshape_kernel(basis, n, exact, MapRole::kDerivation);
}

}  // namespace wickrot
