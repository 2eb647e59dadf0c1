#pragma once

#include <limits>
#include <optional>
#include <string>

#include "wickrot/involution.hpp"
#include "wickrot/optimize.hpp"

namespace wickrot {

/// Orthonormal coordinates for a pseudo-inner product: columns W with
/// W^T g W = diag(+1 x p, -1 x q). In these coordinates the reference
/// Cartan involution theta0 is the diagonal sign matrix itself, its
/// inner product g_theta0 is the plain dot product, and the norm on
/// bracket space is the flat Euclidean one.
struct FlatFrame {
  int n = 0, p = 0, q = 0;
  Eigen::MatrixXd basis;      // W
  Eigen::MatrixXd basis_inv;  // eta W^T g
  Eigen::VectorXd eta;

  Eigen::MatrixXd theta0_flat() const { return eta.asDiagonal(); }
  Eigen::MatrixXd theta0_original() const { return basis * eta.asDiagonal() * basis_inv; }
  Eigen::MatrixXd to_original(const Eigen::MatrixXd& flat_map) const { return basis * flat_map * basis_inv; }
};

/// Frame of the canonical reference involution diag(I_p, -I_q), from the
/// spectral decomposition of the form. Throws on degenerate metrics.
FlatFrame flat_frame_from_metric(const Metric& m, double tol = 1e-9);

/// Frame adapted to a given metric Cartan involution: the +1 eigenspace
/// spans the first p coordinates. Throws when theta fails to be one.
FlatFrame flat_frame_adapted(const Metric& m, const LinearMap& theta, double tol = 1e-9);

/// The structure constants of an algebra seen as a vector in the flat
/// frame, layout v[pair_index(i,j) * n + k].
struct BracketVector {
  FlatFrame frame;
  Eigen::VectorXd v;
  double norm() const { return v.norm(); }
};

BracketVector bracket_vector(const LieAlgebra& L, const FlatFrame& frame);

/// Isometry action (h.mu)(x,y) = h mu(h^-1 x, h^-1 y) on flat coordinates.
Eigen::VectorXd act(const FlatFrame& f, const Eigen::MatrixXd& h, const Eigen::VectorXd& v);

/// Derivative of the action: (X.mu)(x,y) = X mu(x,y) - mu(Xx,y) - mu(x,Xy).
Eigen::VectorXd act_infinitesimal(const FlatFrame& f, const Eigen::MatrixXd& X, const Eigen::VectorXd& v);

/// Norm induced by g_theta0; the flat layout makes it Euclidean.
double theta_norm(const BracketVector& bv);

/// Orthonormal basis of the theta0-symmetric part of o(p,q) (the boosts;
/// dimension p*q) and of the full isometry algebra.
std::vector<Eigen::MatrixXd> symmetric_isometry_basis(const FlatFrame& f);
std::vector<Eigen::MatrixXd> isometry_basis_flat(const FlatFrame& f);

/// Kempf-Ness moment: the unique theta0-symmetric M in o(p,q) with
/// <M, X> = <X.v, v> for every symmetric X. Vanishes exactly at critical
/// points of the orbit norm, and d/dt ||e^{tX} v||^2 at 0 equals 2<X.v,v>.
Eigen::MatrixXd moment(const BracketVector& bv);
double moment_norm(const BracketVector& bv);

/// First-order minimality (vanishing moment) cross-checked by random
/// probing of ||e^{tX} v|| >= ||v|| - tol.
bool is_minimal(const BracketVector& bv, double tol = 1e-10, int probes = 100, std::uint64_t seed = 7);

enum class FlowStatus { kMinimalVectorFound, kCartanFound, kNoCertificate };

struct FlowLogEntry {
  int iter = 0;
  double norm = 0.0;
  double moment_norm = 0.0;
};

struct FlowConfig {
  double step = 0.1;
  double tol_moment = 1e-10;
  int max_iters = 10000;
  double divergence_bound = 1e3;
};

struct FlowResult {
  FlowStatus status = FlowStatus::kNoCertificate;
  Eigen::MatrixXd transporter;  // accumulated group element, flat coords
  Eigen::VectorXd v_final;
  double final_norm = 0.0;
  double final_moment_norm = 0.0;
  double transporter_coordinate_norm = 0.0;
  std::vector<FlowLogEntry> log;
  std::optional<Involution> recovered_theta;  // original basis, verified
  std::string diagnostic;
};

/// Norm-minimizing flow v <- e^{-s m(v)} . v with backtracking halving.
/// Norm is non-increasing along the run. Stops with a minimal vector when
/// the moment norm drops under tol, upgraded to a Cartan certificate when
/// theta0 fixes the limit and the pulled-back involution verifies.
FlowResult minimal_vector_flow(const LieAlgebra& L, const Metric& m, const FlowConfig& cfg = {},
                               const LinearMap* theta0 = nullptr);

/// Same flow from an arbitrary start v0 = pre_transporter . mu.
FlowResult minimal_vector_flow_from(const LieAlgebra& L, const Metric& m, const BracketVector& start,
                                    const Eigen::MatrixXd& pre_transporter, const FlowConfig& cfg = {});

struct SearchBudget {
  int starts = 32;
  int iterations = 2000;
};

struct FindResult {
  std::optional<Involution> theta;  // verified Lie Cartan involution
  double best_residual = std::numeric_limits<double>::infinity();
  int best_start = -1;
};

/// Search theta = e^x theta0 e^{-x} over the theta0-symmetric part of
/// o(p,q), minimizing ||theta.mu - mu||^2. Every point of the search
/// space is a metric Cartan involution by construction; the objective
/// measures automorphy. Absence of a certificate proves nothing.
FindResult find_lie_cartan(const LieAlgebra& L, const Metric& m, SearchBudget budget = {},
                           std::uint64_t seed = 1, double tol = 1e-9);

}  // namespace wickrot
