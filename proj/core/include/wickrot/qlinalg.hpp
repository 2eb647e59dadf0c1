#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "wickrot/rational.hpp"

namespace wickrot {

using QVec = std::vector<Rational>;

/// Small dense matrix over the exact rationals. Everything a few brackets
/// deep in this project (Jacobi checks, derivation kernels, Koszul solves,
/// the Wick twist) runs through here so that rational inputs give exact
/// zero residuals instead of float noise.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  QMat(int rows, int cols, std::initializer_list<Rational> vals);

  static QMat identity(int n);
  static QMat zero(int rows, int cols) { return QMat(rows, cols); }
  static QMat diag(const QVec& d);
  static QMat from_double(const Eigen::MatrixXd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat operator*(const Rational& s) const;
  QMat operator-() const { return *this * Rational(-1); }
  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QVec apply(const QVec& x) const;
  QMat transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Rational max_abs() const;

  QVec col(int c) const;
  void set_col(int c, const QVec& v);
  QMat cols_subset(const std::vector<int>& idx) const;

  Eigen::MatrixXd to_double() const;

  int rows_ = 0, cols_ = 0;
  QVec a_;
};

QVec qvec_zero(int n);
QVec qvec_unit(int n, int k);
QVec operator+(const QVec& x, const QVec& y);
QVec operator-(const QVec& x, const QVec& y);
// Named rather than an operator: a free operator* taking a Rational would
// join overload resolution for every Eigen product in this namespace, and
// boost's integer constructor traits choke on Eigen expression types.
QVec qvec_scale(const Rational& s, const QVec& x);
Rational qvec_max_abs(const QVec& x);
bool qvec_is_zero(const QVec& x);
Eigen::VectorXd qvec_to_double(const QVec& x);
QVec qvec_from_double(const Eigen::VectorXd& x);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMat& m);

int rank(QMat m);

/// Canonical kernel basis (one vector per free column of the RREF),
/// returned as the columns of an n x k matrix. Deterministic.
QMat nullspace(const QMat& m);

/// x with a*x = b for square nonsingular a. Throws std::domain_error
/// if a is singular.
QVec solve(const QMat& a, const QVec& b);
QMat solve(const QMat& a, const QMat& b);

QMat inverse(const QMat& a);

/// Row-space canonical form (RREF with zero rows dropped); two subspaces
/// given by spanning rows are equal iff their canonical forms are equal.
QMat row_space_canonical(QMat m);

}  // namespace wickrot
