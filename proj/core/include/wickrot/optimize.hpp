#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace wickrot {

/// Deterministic random source. Gaussians are produced by a hand-rolled
/// Box-Muller over the raw 64-bit stream so that replaying a seed gives
/// identical draws independent of the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gauss();
  Eigen::VectorXd gauss_vector(int n);
  Eigen::MatrixXd gauss_matrix(int rows, int cols);

 private:
  std::uint64_t s_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct LmOptions {
  int max_iters = 200;
  double cost_tol = 1e-24;    // stop when the squared residual is this small
  double step_tol = 1e-14;    // stop when steps stall
  double fd_step = 1e-7;      // forward-difference Jacobian step
};

struct LmResult {
  Eigen::VectorXd x;
  double cost = 0.0;  // squared residual norm at x
  int iters = 0;
};

/// Damped Gauss-Newton (Levenberg-Marquardt) on a residual vector with a
/// finite-difference Jacobian. Small dense problems only.
LmResult levenberg_marquardt(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                             const Eigen::VectorXd& x0, const LmOptions& opts = {});

}  // namespace wickrot
