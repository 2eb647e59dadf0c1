#pragma once

#include <string>
#include <vector>

#include "wickrot/qlinalg.hpp"

namespace wickrot {

enum class MapRole { kEndomorphism, kAutomorphismCandidate, kDerivation };

/// A linear map in the basis of the algebra it refers to.
struct LinearMap {
  QMat mat;
  MapRole role = MapRole::kEndomorphism;
  bool exact = true;

  int dim() const { return mat.rows(); }
};

struct JacobiReport {
  Rational max_residual;
  bool ok = false;
  // Worst offending (i, j, k, l), 0-based; (-1,...) when clean.
  int i = -1, j = -1, k = -1, l = -1;
  double residual_double() const { return to_double(max_residual); }
};

struct StructuralReport {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool semisimple = false;
  bool reductive = false;
  std::vector<int> derived_series_dims;
  std::vector<int> lower_central_dims;
  int center_dim = 0;
  int radical_dim = 0;
  int nilpotency_class = 0;  // 0 when not nilpotent
};

/// Finite-dimensional real Lie algebra given by structure constants on a
/// chosen basis. Only the pairs i<j are stored; the antisymmetric half is
/// reconstructed on access. Constants parsed from integer or rational
/// literals keep `exact` set, and every structural check on such an
/// algebra is a statement in exact arithmetic.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(int n, std::vector<std::string> labels, std::string name, bool exact);

  static int pair_index(int i, int j, int n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }
  static int pair_count(int n) { return n * (n - 1) / 2; }

  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool exact() const { return exact_; }
  void set_exact(bool e) { exact_ = e; }

  /// Structure constant of [e_i, e_j] along e_k for any i, j (signed).
  Rational c(int i, int j, int k) const;
  void set_bracket(int i, int j, const QVec& coeffs);  // requires i < j
  const QVec& pair_coeffs(int p) const { return c_[static_cast<std::size_t>(p)]; }

  bool is_abelian() const;

  QVec bracket(const QVec& x, const QVec& y) const;
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
  bool exact_ = true;
  std::vector<QVec> c_;  // one coefficient vector per pair i<j
};

/// Matrix of y -> [x, y].
LinearMap ad(const LieAlgebra& L, const QVec& x);

/// Max Jacobi residual over all triples i<j<k and components l. `ok`
/// demands exact zero for exact algebras and residual <= tol otherwise.
JacobiReport check_jacobi(const LieAlgebra& L, double tol = 1e-9);

/// kappa(x, y) = trace(ad x . ad y) on the basis.
QMat killing_form(const LieAlgebra& L);

/// Basis of Der(L), the kernel of D[x,y] = [Dx,y] + [x,Dy]. Exact RREF
/// kernel for exact algebras, SVD kernel at tolerance otherwise.
std::vector<LinearMap> derivation_algebra(const LieAlgebra& L, double tol = 1e-9);

StructuralReport structural_classify(const LieAlgebra& L, double tol = 1e-9);

/// True iff A[x,y] = [Ax,Ay] on all basis pairs within tol (exact for
/// exact data). Throws std::domain_error when A is singular.
bool is_automorphism(const LieAlgebra& L, const LinearMap& A, double tol = 1e-9);

/// Largest violation of A[e_i,e_j] = [Ae_i, Ae_j]; does not require
/// invertibility.
Rational automorphism_residual(const LieAlgebra& L, const QMat& A);

/// Transported algebra with bracket (h.mu)(x,y) = h(mu(h^-1 x, h^-1 y)).
LieAlgebra act_on_bracket(const LieAlgebra& L, const QMat& h);

}  // namespace wickrot
