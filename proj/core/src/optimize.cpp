#include "wickrot/optimize.hpp"

#include <cmath>

namespace wickrot {

std::uint64_t Rng::next_u64() {
  // splitmix64
  s_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::gauss() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 <= 1e-300) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Eigen::VectorXd Rng::gauss_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gauss();
  return v;
}

Eigen::MatrixXd Rng::gauss_matrix(int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = gauss();
  return m;
}

LmResult levenberg_marquardt(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                             const Eigen::VectorXd& x0, const LmOptions& opts) {
  Eigen::VectorXd x = x0;
  Eigen::VectorXd r = residual(x);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  int d = static_cast<int>(x.size());
  int it = 0;
  for (; it < opts.max_iters; ++it) {
    if (cost <= opts.cost_tol) break;
    Eigen::MatrixXd jac(r.size(), d);
    for (int k = 0; k < d; ++k) {
      Eigen::VectorXd xk = x;
      double h = opts.fd_step * std::max(1.0, std::abs(x[k]));
      xk[k] += h;
      jac.col(k) = (residual(xk) - r) / h;
    }
    Eigen::MatrixXd jtj = jac.transpose() * jac;
    Eigen::VectorXd jtr = jac.transpose() * r;
    if (jtr.lpNorm<Eigen::Infinity>() < 1e-16) break;
    bool stepped = false;
    for (int attempt = 0; attempt < 16; ++attempt) {
      Eigen::MatrixXd a = jtj;
      for (int k = 0; k < d; ++k) a(k, k) += lambda * std::max(jtj(k, k), 1e-12);
      Eigen::VectorXd delta = a.ldlt().solve(-jtr);
      Eigen::VectorXd xn = x + delta;
      Eigen::VectorXd rn = residual(xn);
      double cn = rn.squaredNorm();
      if (cn < cost) {
        if (std::abs(cost - cn) < opts.step_tol * std::max(1.0, cost) && lambda <= 1e-3) {
          x = xn;
          r = rn;
          cost = cn;
          return LmResult{x, cost, it + 1};
        }
        x = xn;
        r = rn;
        cost = cn;
        lambda = std::max(lambda * 0.25, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
    if (!stepped) break;
  }
  return LmResult{x, cost, it};
}

}  // namespace wickrot
