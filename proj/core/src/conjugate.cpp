#include "wickrot/conjugate.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace wickrot {

MetricConjugacy conjugate_metric_cartan(const Metric& m, const LinearMap& theta1, const LinearMap& theta2,
                                        double tol) {
  if (!is_metric_cartan(m, theta1, tol).metric_cartan() || !is_metric_cartan(m, theta2, tol).metric_cartan())
    throw std::invalid_argument("conjugate_metric_cartan: inputs must be metric Cartan involutions");

  Eigen::MatrixXd g = m.form.to_double();
  Eigen::MatrixXd t1 = theta1.mat.to_double();
  Eigen::MatrixXd t2 = theta2.mat.to_double();
  int n = m.dim();

  // S1 = g theta1 is SPD; conjugating by its square root turns theta2
  // theta1 into an ordinary SPD matrix whose log lives in the right spot.
  Eigen::MatrixXd s1 = 0.5 * (g * t1 + (g * t1).transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es1(s1);
  Eigen::MatrixXd b = es1.operatorSqrt();
  Eigen::MatrixXd binv = es1.operatorInverseSqrt();

  Eigen::MatrixXd mm = b * (t2 * t1) * binv;
  mm = 0.5 * (mm + mm.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esm(mm);
  Eigen::VectorXd lambda = esm.eigenvalues();
  Eigen::VectorXd loglam(n), sqrtlam(n);
  for (int i = 0; i < n; ++i) {
    if (lambda[i] <= 0) throw std::domain_error("conjugate_metric_cartan: theta2 theta1 is not positive");
    loglam[i] = std::log(lambda[i]);
    sqrtlam[i] = std::sqrt(lambda[i]);
  }
  Eigen::MatrixXd u = esm.eigenvectors();
  Eigen::MatrixXd xprime = u * loglam.asDiagonal() * u.transpose();
  Eigen::MatrixXd ehalf = u * sqrtlam.asDiagonal() * u.transpose();

  MetricConjugacy out;
  out.x = binv * xprime * b;
  out.phi = binv * ehalf * b;
  out.conjugation_residual = (out.phi * t1 * out.phi.inverse() - t2).cwiseAbs().maxCoeff();
  out.isometry_residual = (out.phi.transpose() * g * out.phi - g).cwiseAbs().maxCoeff();
  return out;
}

std::optional<LieConjugacy> conjugate_lie_cartan(const LieAlgebra& L, const Metric& m, const LinearMap& theta1,
                                                 const LinearMap& theta2, SearchBudget budget, std::uint64_t seed,
                                                 double tol) {
  if (!is_lie_cartan(L, m, theta1, tol).lie_cartan() || !is_lie_cartan(L, m, theta2, tol).lie_cartan())
    throw std::invalid_argument("conjugate_lie_cartan: inputs must be Lie Cartan involutions");

  int n = L.dim();
  Eigen::MatrixXd g = m.form.to_double();
  Eigen::MatrixXd t1 = theta1.mat.to_double();
  Eigen::MatrixXd t2 = theta2.mat.to_double();

  std::vector<LinearMap> gens = derivations_in_isometry_algebra(L, m, tol);
  int d = static_cast<int>(gens.size());
  std::vector<Eigen::MatrixXd> k;
  k.reserve(static_cast<std::size_t>(d));
  for (const auto& gmap : gens) k.push_back(gmap.mat.to_double());

  auto finish = [&](const Eigen::VectorXd& c) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < d; ++i) x += c[i] * k[static_cast<std::size_t>(i)];
    Eigen::MatrixXd phi = x.exp();
    LieConjugacy out;
    out.phi = phi;
    out.coefficients = c;
    for (const auto& gmap : gens) out.generators.push_back(gmap.mat);
    out.conjugation_residual = (phi * t1 * phi.inverse() - t2).cwiseAbs().maxCoeff();
    out.isometry_residual = (phi.transpose() * g * phi - g).cwiseAbs().maxCoeff();
    out.automorphism_residual = to_double(automorphism_residual(L, QMat::from_double(phi)));
    return out;
  };

  double accept = std::max(tol, 1e-9);
  {
    LieConjugacy id = finish(Eigen::VectorXd::Zero(d));
    if (id.conjugation_residual <= accept) return id;
  }
  if (d == 0) return std::nullopt;

  auto residual = [&](const Eigen::VectorXd& c) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < d; ++i) x += c[i] * k[static_cast<std::size_t>(i)];
    Eigen::MatrixXd phi = x.exp();
    Eigen::MatrixXd r = phi * t1 * (-x).exp() - t2;
    return Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(r.data(), r.size()));
  };

  Rng rng(seed);
  const double scales[3] = {0.3, 1.0, 3.0};
  std::optional<LieConjugacy> best;
  for (int s = 0; s < std::max(1, budget.starts); ++s) {
    Eigen::VectorXd c0 = s == 0 ? Eigen::VectorXd::Zero(d) : Eigen::VectorXd(scales[(s - 1) % 3] * rng.gauss_vector(d));
    LmOptions opts;
    opts.max_iters = budget.iterations;
    opts.cost_tol = accept * accept * 1e-4;
    LmResult lm = levenberg_marquardt(residual, c0, opts);
    if (std::sqrt(lm.cost) <= accept) {
      LieConjugacy cand = finish(lm.x);
      if (cand.conjugation_residual <= accept &&
          (!best || cand.conjugation_residual < best->conjugation_residual)) {
        best = cand;
        break;  // merged deterministically by (residual, start index)
      }
    }
  }
  return best;
}

}  // namespace wickrot
