#include "wickrot/catalog.hpp"

#include <map>

namespace wickrot {

namespace {

LieAlgebra make_heis3() {
  LieAlgebra l(3, {"e1", "e2", "e3"}, "heis3", true);
  l.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});  // [e1,e2] = e3
  return l;
}

// Basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra make_sl2r() {
  LieAlgebra l(3, {"H", "E", "F"}, "sl2r", true);
  l.set_bracket(0, 1, {Rational(0), Rational(2), Rational(0)});
  l.set_bracket(0, 2, {Rational(0), Rational(0), Rational(-2)});
  l.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
  return l;
}

// Cyclic basis: [x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2.
LieAlgebra make_su2() {
  LieAlgebra l(3, {"x1", "x2", "x3"}, "su2", true);
  l.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  l.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
  l.set_bracket(0, 2, {Rational(0), Rational(-1), Rational(0)});  // [x1,x3] = -x2
  return l;
}

// o(1,3) from its defining representation: kernel of X^T eta + eta X for
// eta = diag(1,-1,-1,-1), commutators expanded back in the kernel basis.
LieAlgebra make_o13() {
  QVec eta_diag = {Rational(1), Rational(-1), Rational(-1), Rational(-1)};
  Metric eta{QMat::diag(eta_diag), true};
  std::vector<LinearMap> basis = isometry_algebra_basis(eta);
  int d = static_cast<int>(basis.size());  // 6
  QMat cols(16, d);
  for (int i = 0; i < d; ++i) {
    const QMat& x = basis[static_cast<std::size_t>(i)].mat;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) cols(r * 4 + c, i) = x(r, c);
  }
  QMat ctc = cols.transpose() * cols;
  LieAlgebra l(d, {}, "o13", true);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QMat comm = basis[static_cast<std::size_t>(i)].mat * basis[static_cast<std::size_t>(j)].mat -
                  basis[static_cast<std::size_t>(j)].mat * basis[static_cast<std::size_t>(i)].mat;
      QVec target(16);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) target[static_cast<std::size_t>(r * 4 + c)] = comm(r, c);
      l.set_bracket(i, j, solve(ctc, cols.transpose().apply(target)));
    }
  return l;
}

// Matrix of X -> eta X eta on the chosen o(1,3) basis: the Cartan
// involution fixing rotations and flipping boosts.
LinearMap make_o13_cartan(const LieAlgebra& o13) {
  QVec eta_diag = {Rational(1), Rational(-1), Rational(-1), Rational(-1)};
  QMat eta = QMat::diag(eta_diag);
  Metric meta{eta, true};
  std::vector<LinearMap> basis = isometry_algebra_basis(meta);
  int d = static_cast<int>(basis.size());
  QMat cols(16, d);
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) cols(r * 4 + c, i) = basis[static_cast<std::size_t>(i)].mat(r, c);
  QMat ctc = cols.transpose() * cols;
  QMat theta(d, d);
  for (int i = 0; i < d; ++i) {
    QMat img = eta * basis[static_cast<std::size_t>(i)].mat * eta;
    QVec target(16);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) target[static_cast<std::size_t>(r * 4 + c)] = img(r, c);
    theta.set_col(i, solve(ctc, cols.transpose().apply(target)));
  }
  return LinearMap{theta, MapRole::kAutomorphismCandidate, true};
}

LinearMap sl2r_minus_transpose() {
  // X -> -X^T on (H, E, F): H -> -H, E -> -F, F -> -E.
  QMat t(3, 3, {Rational(-1), Rational(0), Rational(0),
                Rational(0), Rational(0), Rational(-1),
                Rational(0), Rational(-1), Rational(0)});
  return LinearMap{t, MapRole::kAutomorphismCandidate, true};
}

QMat block_diag(const QMat& a, const QMat& b) {
  QMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& name) {
  int n = a.dim() + b.dim();
  std::vector<std::string> labels;
  for (const auto& s : a.labels()) labels.push_back(s + "'");
  for (const auto& s : b.labels()) labels.push_back(s + "''");
  LieAlgebra l(n, labels, name, a.exact() && b.exact());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      QVec c = qvec_zero(n);
      for (int k = 0; k < a.dim(); ++k) c[static_cast<std::size_t>(k)] = a.c(i, j, k);
      l.set_bracket(i, j, c);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      QVec c = qvec_zero(n);
      for (int k = 0; k < b.dim(); ++k) c[static_cast<std::size_t>(a.dim() + k)] = b.c(i, j, k);
      l.set_bracket(a.dim() + i, a.dim() + j, c);
    }
  return l;
}

std::vector<std::string> catalog_names() {
  return {"heis3_lorentz", "sl2r_killing", "sl2r_minusk", "su2_killing", "su2_minusk",
          "sl2r2_mixed",   "sl2r2_minusk", "o13_killing", "o13_minusk",  "abelian3"};
}

CatalogEntry catalog(const std::string& name) {
  if (name == "heis3_lorentz") {
    LieAlgebra l = make_heis3();
    Metric m{QMat::diag({Rational(-1), Rational(-1), Rational(1)}), true};
    QMat t = QMat::diag({Rational(-1), Rational(-1), Rational(1)});
    return CatalogEntry{name, "Heisenberg algebra with the (1,2) metric diag(-1,-1,1)", l, m,
                        LinearMap{t, MapRole::kAutomorphismCandidate, true}};
  }
  if (name == "sl2r_killing" || name == "sl2r_minusk") {
    LieAlgebra l = make_sl2r();
    QMat kappa = killing_form(l);
    if (name == "sl2r_killing")
      return CatalogEntry{name, "sl2(R) with its Killing form, signature (2,1)", l, Metric{kappa, true},
                          std::nullopt};
    return CatalogEntry{name, "sl2(R) with minus the Killing form, signature (1,2)", l, Metric{-kappa, true},
                        sl2r_minus_transpose()};
  }
  if (name == "su2_killing" || name == "su2_minusk") {
    LieAlgebra l = make_su2();
    QMat kappa = killing_form(l);
    if (name == "su2_killing")
      return CatalogEntry{name, "su(2) with its Killing form, signature (0,3)", l, Metric{kappa, true},
                          std::nullopt};
    return CatalogEntry{name, "su(2) with minus the Killing form (Riemannian)", l, Metric{-kappa, true},
                        LinearMap{QMat::identity(3), MapRole::kAutomorphismCandidate, true}};
  }
  if (name == "sl2r2_mixed" || name == "sl2r2_minusk") {
    LieAlgebra s = make_sl2r();
    LieAlgebra l = direct_sum(s, s, "sl2r2");
    QMat kappa = killing_form(s);
    if (name == "sl2r2_mixed")
      return CatalogEntry{name, "sl2(R) + sl2(R) with -kappa on one factor and +kappa on the other, signature (3,3)",
                          l, Metric{block_diag(-kappa, kappa), true}, std::nullopt};
    QMat theta_block = sl2r_minus_transpose().mat;
    return CatalogEntry{name, "sl2(R) + sl2(R) with -kappa on both factors", l,
                        Metric{block_diag(-kappa, -kappa), true},
                        LinearMap{block_diag(theta_block, theta_block), MapRole::kAutomorphismCandidate, true}};
  }
  if (name == "o13_killing" || name == "o13_minusk") {
    LieAlgebra l = make_o13();
    QMat kappa = killing_form(l);
    if (name == "o13_killing")
      return CatalogEntry{name, "o(1,3) with its Killing form, signature (3,3)", l, Metric{kappa, true},
                          std::nullopt};
    return CatalogEntry{name, "o(1,3) with minus the Killing form, signature (3,3)", l, Metric{-kappa, true},
                        make_o13_cartan(l)};
  }
  if (name == "abelian3") {
    LieAlgebra l(3, {"e1", "e2", "e3"}, "abelian3", true);
    return CatalogEntry{name, "abelian R^3 with the Euclidean metric", l, Metric{QMat::identity(3), true},
                        LinearMap{QMat::identity(3), MapRole::kAutomorphismCandidate, true}};
  }
  std::string msg = "unknown catalog entry '" + name + "'; available:";
  for (const auto& s : catalog_names()) msg += " " + s;
  throw std::invalid_argument(msg);
}

}  // namespace wickrot
