#include "wickrot/wick.hpp"

namespace wickrot {

WickResult wick_rotate(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol) {
  int n = L.dim();
  if (m.dim() != n || theta.dim() != n) throw std::invalid_argument("wick_rotate: dimension mismatch");
  bool exact = L.exact() && m.exact && theta.exact;

  auto fail_if = [&](const QMat& residual, const char* what) {
    bool bad = exact ? !residual.is_zero() : to_double(residual.max_abs()) > tol;
    if (bad) throw std::invalid_argument(std::string("wick_rotate: theta is not ") + what);
  };
  fail_if(theta.mat * theta.mat - QMat::identity(n), "an involution");
  fail_if(theta.mat.transpose() * m.form * theta.mat - m.form, "an isometry of the metric");
  {
    Rational res = automorphism_residual(L, theta.mat);
    bool bad = exact ? res != 0 : to_double(res) > tol;
    if (bad) throw std::invalid_argument("wick_rotate: theta is not an automorphism");
  }

  CartanDecomposition cd = cartan_decomposition(theta, tol);
  int td = cd.t_dim();
  QMat basis(n, n);
  for (int c = 0; c < td; ++c) basis.set_col(c, cd.t_basis.col(c));
  for (int c = 0; c < cd.p_dim(); ++c) basis.set_col(td + c, cd.p_basis.col(c));

  auto in_t = [&](int a) { return a < td; };

  LieAlgebra rotated(n, {}, L.name().empty() ? std::string("wick") : L.name() + "_wick", exact);
  {
    std::vector<std::string> labels;
    for (int a = 0; a < td; ++a) labels.push_back("t" + std::to_string(a + 1));
    for (int b = 0; b < n - td; ++b) labels.push_back("q" + std::to_string(b + 1));
    rotated = LieAlgebra(n, labels, L.name().empty() ? std::string("wick") : L.name() + "_wick", exact);
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      QVec w = solve(basis, L.bracket(basis.col(a), basis.col(b)));
      // The bracket respects the eigenspace grading; components off the
      // expected block vanish (up to tol on the float path).
      bool target_t = in_t(a) == in_t(b);
      Rational off = 0;
      for (int c = 0; c < n; ++c)
        if (in_t(c) != target_t) {
          off = std::max(off, rat_abs(w[static_cast<std::size_t>(c)]));
          w[static_cast<std::size_t>(c)] = 0;
        }
      bool bad = exact ? off != 0 : to_double(off) > std::max(tol, 1e-7);
      if (bad) throw std::invalid_argument("wick_rotate: bracket does not respect the eigenspace grading");
      if (!in_t(a) && !in_t(b))
        for (auto& x : w) x = -x;
      rotated.set_bracket(a, b, w);
    }

  QMat tt = cd.t_basis.transpose() * m.form * cd.t_basis;
  QMat pp = cd.p_basis.transpose() * m.form * cd.p_basis;
  QMat cross = cd.t_basis.transpose() * m.form * cd.p_basis;
  {
    bool bad = exact ? !cross.is_zero() : to_double(cross.max_abs()) > std::max(tol, 1e-7);
    if (bad) throw std::invalid_argument("wick_rotate: eigenspaces are not metric-orthogonal");
  }
  QMat form(n, n);
  for (int i = 0; i < td; ++i)
    for (int j = 0; j < td; ++j) form(i, j) = tt(i, j);
  for (int i = 0; i < n - td; ++i)
    for (int j = 0; j < n - td; ++j) form(td + i, td + j) = -pp(i, j);

  WickResult res;
  res.algebra = std::move(rotated);
  res.metric = Metric{form, exact};
  res.basis_map = basis;
  res.t_dim = td;
  return res;
}

LinearMap induced_involution(const WickResult& w) {
  int n = w.algebra.dim();
  QMat t(n, n);
  for (int i = 0; i < n; ++i) t(i, i) = i < w.t_dim ? 1 : -1;
  return LinearMap{t, MapRole::kAutomorphismCandidate, true};
}

bool involutivity_double_wick(const LieAlgebra& L, const Metric& m, const LinearMap& theta, double tol) {
  WickResult w1 = wick_rotate(L, m, theta, tol);
  WickResult w2 = wick_rotate(w1.algebra, w1.metric, induced_involution(w1), tol);

  LieAlgebra expected = act_on_bracket(L, inverse(w1.basis_map));
  QMat expected_form = w1.basis_map.transpose() * m.form * w1.basis_map;

  bool exact = L.exact() && m.exact && theta.exact;
  int n = L.dim();
  Rational worst = (w2.metric.form - expected_form).max_abs();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) worst = std::max(worst, rat_abs(w2.algebra.c(i, j, k) - expected.c(i, j, k)));
  return exact ? worst == 0 : to_double(worst) <= tol;
}

}  // namespace wickrot
