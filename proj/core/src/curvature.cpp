#include "wickrot/curvature.hpp"

namespace wickrot {

QMat CurvatureData::riemann_op(int i, int j) const {
  if (i == j) return QMat::zero(n, n);
  if (i < j) return riemann[static_cast<std::size_t>(LieAlgebra::pair_index(i, j, n))];
  return -riemann[static_cast<std::size_t>(LieAlgebra::pair_index(j, i, n))];
}

std::vector<QMat> levi_civita(const LieAlgebra& L, const Metric& m) {
  int n = L.dim();
  if (m.dim() != n) throw std::invalid_argument("levi_civita: dimension mismatch");
  signature(m);  // rejects degenerate metrics

  std::vector<QMat> gamma;
  gamma.reserve(static_cast<std::size_t>(n));
  Rational half(1, 2);
  for (int i = 0; i < n; ++i) {
    QVec ei = qvec_unit(n, i);
    QMat rhs(n, n);
    for (int j = 0; j < n; ++j) {
      QVec ej = qvec_unit(n, j);
      for (int k = 0; k < n; ++k) {
        QVec ek = qvec_unit(n, k);
        Rational v = m.eval(L.bracket(ei, ej), ek) - m.eval(L.bracket(ej, ek), ei) + m.eval(L.bracket(ek, ei), ej);
        rhs(k, j) = half * v;
      }
    }
    gamma.push_back(solve(m.form, rhs));
  }
  return gamma;
}

CurvatureData curvature(const LieAlgebra& L, const Metric& m) {
  CurvatureData cd;
  cd.n = L.dim();
  cd.exact = L.exact() && m.exact;
  cd.gamma = levi_civita(L, m);
  int n = cd.n;

  cd.riemann.reserve(static_cast<std::size_t>(LieAlgebra::pair_count(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QMat r = cd.gamma[static_cast<std::size_t>(i)] * cd.gamma[static_cast<std::size_t>(j)] -
               cd.gamma[static_cast<std::size_t>(j)] * cd.gamma[static_cast<std::size_t>(i)];
      for (int k = 0; k < n; ++k) {
        Rational ck = L.c(i, j, k);
        if (ck != 0) r = r - cd.gamma[static_cast<std::size_t>(k)] * ck;
      }
      cd.riemann.push_back(r);
    }

  cd.ricci_tensor = QMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int l = 0; l < n; ++l) s += cd.riemann_op(l, j)(l, i);
      cd.ricci_tensor(i, j) = s;
    }

  cd.ricci_operator = solve(m.form, cd.ricci_tensor);
  cd.scalar = cd.ricci_operator.trace();
  return cd;
}

}  // namespace wickrot
