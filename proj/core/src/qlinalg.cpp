#include "wickrot/qlinalg.hpp"

#include <algorithm>

namespace wickrot {

QMat::QMat(int rows, int cols, std::initializer_list<Rational> vals) : QMat(rows, cols) {
  if (static_cast<int>(vals.size()) != rows * cols) throw std::invalid_argument("QMat: initializer size mismatch");
  std::copy(vals.begin(), vals.end(), a_.begin());
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::diag(const QVec& d) {
  QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

QMat QMat::from_double(const Eigen::MatrixXd& m) {
  QMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = rational_from_double(m(i, j));
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: shape mismatch in +");
  QMat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: shape mismatch in -");
  QMat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat: shape mismatch in *");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

QMat QMat::operator*(const Rational& s) const {
  QMat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

QVec QMat::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("QMat: vector length mismatch");
  QVec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Rational QMat::trace() const {
  Rational s = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool QMat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool QMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational QMat::max_abs() const {
  Rational m = 0;
  for (const auto& v : a_) m = std::max(m, rat_abs(v));
  return m;
}

QVec QMat::col(int c) const {
  QVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void QMat::set_col(int c, const QVec& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

QMat QMat::cols_subset(const std::vector<int>& idx) const {
  QMat r(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < r.cols(); ++j)
    for (int i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
  return r;
}

Eigen::MatrixXd QMat::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = wickrot::to_double((*this)(i, j));
  return m;
}

QVec qvec_zero(int n) { return QVec(static_cast<std::size_t>(n)); }

QVec qvec_unit(int n, int k) {
  QVec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

QVec operator+(const QVec& x, const QVec& y) {
  QVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

QVec operator-(const QVec& x, const QVec& y) {
  QVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

QVec qvec_scale(const Rational& s, const QVec& x) {
  QVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

Rational qvec_max_abs(const QVec& x) {
  Rational m = 0;
  for (const auto& v : x) m = std::max(m, rat_abs(v));
  return m;
}

bool qvec_is_zero(const QVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

Eigen::VectorXd qvec_to_double(const QVec& x) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = to_double(x[i]);
  return v;
}

QVec qvec_from_double(const Eigen::VectorXd& x) {
  QVec v(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) v[static_cast<std::size_t>(i)] = rational_from_double(x[i]);
  return v;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m) {
  QMat e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  QMat basis(m.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[static_cast<std::size_t>(k)];
    basis(fc, k) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) basis(pivots[static_cast<std::size_t>(i)], k) = -e(i, fc);
  }
  return basis;
}

QVec solve(const QMat& a, const QVec& b) {
  QMat rhs(static_cast<int>(b.size()), 1);
  rhs.set_col(0, b);
  return solve(a, rhs).col(0);
}

QMat solve(const QMat& a, const QMat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  int n = a.rows();
  QMat aug(n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) throw std::domain_error("solve: singular matrix");
  QMat x(n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

QMat inverse(const QMat& a) { return solve(a, QMat::identity(a.rows())); }

QMat row_space_canonical(QMat m) {
  std::vector<int> pivots = rref(m);
  QMat r(static_cast<int>(pivots.size()), m.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace wickrot
