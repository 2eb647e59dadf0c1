#include "wickrot/lie_algebra.hpp"

#include <Eigen/SVD>

namespace wickrot {

LieAlgebra::LieAlgebra(int n, std::vector<std::string> labels, std::string name, bool exact)
    : n_(n), labels_(std::move(labels)), name_(std::move(name)), exact_(exact) {
  if (n <= 0 || n > 32) throw std::invalid_argument("LieAlgebra: dimension out of range");
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n) throw std::invalid_argument("LieAlgebra: label count mismatch");
  c_.assign(static_cast<std::size_t>(pair_count(n)), qvec_zero(n));
}

Rational LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return 0;
  if (i < j) return c_[static_cast<std::size_t>(pair_index(i, j, n_))][static_cast<std::size_t>(k)];
  return -c_[static_cast<std::size_t>(pair_index(j, i, n_))][static_cast<std::size_t>(k)];
}

void LieAlgebra::set_bracket(int i, int j, const QVec& coeffs) {
  if (!(0 <= i && i < j && j < n_)) throw std::invalid_argument("set_bracket: need 0 <= i < j < n");
  if (static_cast<int>(coeffs.size()) != n_) throw std::invalid_argument("set_bracket: coefficient length");
  c_[static_cast<std::size_t>(pair_index(i, j, n_))] = coeffs;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : c_)
    if (!qvec_is_zero(v)) return false;
  return true;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("bracket: dimension mismatch");
  QVec out = qvec_zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Rational w = x[i] * y[j] - x[j] * y[i];
      if (w == 0) continue;
      const QVec& cij = c_[static_cast<std::size_t>(pair_index(i, j, n_))];
      for (int k = 0; k < n_; ++k) out[k] += w * cij[static_cast<std::size_t>(k)];
    }
  return out;
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      double w = x[i] * y[j] - x[j] * y[i];
      if (w == 0.0) continue;
      const QVec& cij = c_[static_cast<std::size_t>(pair_index(i, j, n_))];
      for (int k = 0; k < n_; ++k) out[k] += w * to_double(cij[static_cast<std::size_t>(k)]);
    }
  return out;
}

LinearMap ad(const LieAlgebra& L, const QVec& x) {
  int n = L.dim();
  QMat m(n, n);
  for (int j = 0; j < n; ++j) m.set_col(j, L.bracket(x, qvec_unit(n, j)));
  return LinearMap{m, MapRole::kEndomorphism, L.exact()};
}

JacobiReport check_jacobi(const LieAlgebra& L, double tol) {
  int n = L.dim();
  JacobiReport rep;
  rep.max_residual = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        QVec ei = qvec_unit(n, i), ej = qvec_unit(n, j), ek = qvec_unit(n, k);
        QVec r = L.bracket(ei, L.bracket(ej, ek)) + L.bracket(ej, L.bracket(ek, ei)) + L.bracket(ek, L.bracket(ei, ej));
        for (int l = 0; l < n; ++l) {
          Rational a = rat_abs(r[static_cast<std::size_t>(l)]);
          if (a > rep.max_residual) {
            rep.max_residual = a;
            rep.i = i;
            rep.j = j;
            rep.k = k;
            rep.l = l;
          }
        }
      }
  rep.ok = L.exact() ? rep.max_residual == 0 : rep.residual_double() <= tol;
  return rep;
}

QMat killing_form(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<QMat> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ads.push_back(ad(L, qvec_unit(n, i)).mat);
  QMat k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

namespace {

// Leibniz system rows: for each pair i<j and component l, the linear
// condition on the n^2 unknowns D_{ab} (flattened a*n + b).
QMat leibniz_system(const LieAlgebra& L) {
  int n = L.dim();
  QMat sys(LieAlgebra::pair_count(n) * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int l = 0; l < n; ++l, ++row) {
        for (int a = 0; a < n; ++a) {
          sys(row, l * n + a) += L.c(i, j, a);     // D(mu(ei,ej))_l
          sys(row, a * n + i) -= L.c(a, j, l);     // -mu(De_i, e_j)_l
          sys(row, a * n + j) -= L.c(i, a, l);     // -mu(e_i, De_j)_l
        }
      }
    }
  return sys;
}

std::vector<LinearMap> maps_from_kernel_columns(const QMat& basis, int n, bool exact) {
  std::vector<LinearMap> out;
  for (int c = 0; c < basis.cols(); ++c) {
    QMat d(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d(a, b) = basis(a * n + b, c);
    out.push_back(LinearMap{d, MapRole::kDerivation, exact});
  }
  return out;
}

QMat double_nullspace(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * std::max(1.0, smax)) ++r;
  Eigen::MatrixXd v = svd.matrixV().rightCols(svd.matrixV().cols() - r);
  return QMat::from_double(v);
}

}  // namespace

std::vector<LinearMap> derivation_algebra(const LieAlgebra& L, double tol) {
  QMat sys = leibniz_system(L);
  QMat basis = L.exact() ? nullspace(sys) : double_nullspace(sys.to_double(), tol);
  return maps_from_kernel_columns(basis, L.dim(), L.exact());
}

namespace {

int space_rank(const LieAlgebra& L, const QMat& rows, double tol) {
  if (L.exact()) return rank(rows);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows.to_double());
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > tol * std::max(1.0, smax)) ++r;
  return r;
}

// Span of [x, y] over rows x of a, rows y of b (row-spanned subspaces).
QMat bracket_span(const LieAlgebra& L, const QMat& a, const QMat& b) {
  QMat rows(a.rows() * b.rows(), L.dim());
  int r = 0;
  for (int i = 0; i < a.rows(); ++i) {
    QVec x(static_cast<std::size_t>(L.dim()));
    for (int k = 0; k < L.dim(); ++k) x[static_cast<std::size_t>(k)] = a(i, k);
    for (int j = 0; j < b.rows(); ++j, ++r) {
      QVec y(static_cast<std::size_t>(L.dim()));
      for (int k = 0; k < L.dim(); ++k) y[static_cast<std::size_t>(k)] = b(j, k);
      QVec z = L.bracket(x, y);
      for (int k = 0; k < L.dim(); ++k) rows(r, k) = z[static_cast<std::size_t>(k)];
    }
  }
  return row_space_canonical(rows);
}

}  // namespace

StructuralReport structural_classify(const LieAlgebra& L, double tol) {
  StructuralReport rep;
  int n = L.dim();
  rep.abelian = L.is_abelian();

  // Derived series g, [g,g], ...
  QMat cur = QMat::identity(n);
  rep.derived_series_dims.push_back(n);
  for (int guard = 0; guard <= n; ++guard) {
    QMat next = bracket_span(L, cur, cur);
    int d = space_rank(L, next, tol);
    if (d == rep.derived_series_dims.back()) break;
    rep.derived_series_dims.push_back(d);
    cur = next;
    if (d == 0) break;
  }
  rep.solvable = rep.derived_series_dims.back() == 0;
  QMat derived = bracket_span(L, QMat::identity(n), QMat::identity(n));

  // Lower central series g, [g,g], [g,[g,g]], ...
  QMat lc = QMat::identity(n);
  rep.lower_central_dims.push_back(n);
  for (int guard = 0; guard <= n; ++guard) {
    QMat next = bracket_span(L, QMat::identity(n), lc);
    int d = space_rank(L, next, tol);
    if (d == rep.lower_central_dims.back()) break;
    rep.lower_central_dims.push_back(d);
    lc = next;
    if (d == 0) break;
  }
  rep.nilpotent = rep.lower_central_dims.back() == 0;
  if (rep.nilpotent) rep.nilpotency_class = static_cast<int>(rep.lower_central_dims.size()) - 1;

  // Center: kernel of x -> ad(x).
  QMat ad_stack(n * n, n);
  for (int i = 0; i < n; ++i) {
    QMat a = ad(L, qvec_unit(n, i)).mat;
    for (int r = 0; r < n; ++r)
      for (int cix = 0; cix < n; ++cix) ad_stack(r * n + cix, i) = a(r, cix);
  }
  QMat center = L.exact() ? nullspace(ad_stack) : QMat::from_double(Eigen::MatrixXd(
      Eigen::JacobiSVD<Eigen::MatrixXd>(ad_stack.to_double(), Eigen::ComputeFullV)
          .matrixV()
          .rightCols(n - space_rank(L, ad_stack, tol))));
  rep.center_dim = center.cols();

  // Radical as the Killing-orthogonal complement of [g,g] (char. 0).
  QMat kappa = killing_form(L);
  QMat perp_sys = derived * kappa;  // rows: x -> kappa(d, x) for d in [g,g]
  QMat radical = L.exact() ? nullspace(perp_sys)
                           : QMat::from_double(Eigen::MatrixXd(
                                 Eigen::JacobiSVD<Eigen::MatrixXd>(perp_sys.to_double(), Eigen::ComputeFullV)
                                     .matrixV()
                                     .rightCols(n - space_rank(L, perp_sys, tol))));
  rep.radical_dim = radical.cols();
  rep.semisimple = rep.radical_dim == 0;

  // Reductive iff radical = center, as subspaces.
  if (rep.radical_dim == rep.center_dim) {
    if (L.exact()) {
      rep.reductive = row_space_canonical(radical.transpose()) == row_space_canonical(center.transpose());
    } else {
      QMat joint(radical.cols() + center.cols(), n);
      for (int i = 0; i < radical.cols(); ++i)
        for (int k = 0; k < n; ++k) joint(i, k) = radical(k, i);
      for (int i = 0; i < center.cols(); ++i)
        for (int k = 0; k < n; ++k) joint(radical.cols() + i, k) = center(k, i);
      rep.reductive = space_rank(L, joint, tol) == rep.radical_dim;
    }
  }
  return rep;
}

Rational automorphism_residual(const LieAlgebra& L, const QMat& A) {
  int n = L.dim();
  Rational worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec lhs = A.apply(L.bracket(qvec_unit(n, i), qvec_unit(n, j)));
      QVec rhs = L.bracket(A.col(i), A.col(j));
      worst = std::max(worst, qvec_max_abs(lhs - rhs));
    }
  return worst;
}

bool is_automorphism(const LieAlgebra& L, const LinearMap& A, double tol) {
  bool singular = L.exact() && A.exact ? rank(A.mat) < A.mat.rows()
                                       : std::abs(A.mat.to_double().determinant()) < 1e-12;
  if (singular) throw std::domain_error("is_automorphism: singular map");
  Rational res = automorphism_residual(L, A.mat);
  return L.exact() && A.exact ? res == 0 : to_double(res) <= tol;
}

LieAlgebra act_on_bracket(const LieAlgebra& L, const QMat& h) {
  int n = L.dim();
  if (h.rows() != n || h.cols() != n) throw std::invalid_argument("act_on_bracket: shape mismatch");
  QMat hinv = inverse(h);  // throws std::domain_error when singular
  LieAlgebra out(n, L.labels(), L.name(), L.exact());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set_bracket(i, j, h.apply(L.bracket(hinv.col(i), hinv.col(j))));
  return out;
}

}  // namespace wickrot
