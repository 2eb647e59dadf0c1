#include "wickrot/git_flow.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

namespace wickrot {

FlatFrame flat_frame_from_metric(const Metric& m, double tol) {
  int n = m.dim();
  Eigen::MatrixXd g = m.form.to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  FlatFrame f;
  f.n = n;
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= tol) throw std::domain_error("flat_frame: degenerate metric");
    (ev > 0 ? pos : neg).push_back(i);
  }
  f.p = static_cast<int>(pos.size());
  f.q = static_cast<int>(neg.size());
  f.basis.resize(n, n);
  f.eta.resize(n);
  int c = 0;
  for (int i : pos) {
    f.basis.col(c) = es.eigenvectors().col(i) / std::sqrt(es.eigenvalues()(i));
    f.eta[c++] = 1.0;
  }
  for (int i : neg) {
    f.basis.col(c) = es.eigenvectors().col(i) / std::sqrt(-es.eigenvalues()(i));
    f.eta[c++] = -1.0;
  }
  f.basis_inv = f.eta.asDiagonal() * f.basis.transpose() * g;
  return f;
}

FlatFrame flat_frame_adapted(const Metric& m, const LinearMap& theta, double tol) {
  Involution iv = is_metric_cartan(m, theta, tol);
  if (!iv.metric_cartan()) throw std::invalid_argument("flat_frame_adapted: theta is not a metric Cartan involution");
  CartanDecomposition cd = cartan_decomposition(theta, tol);
  Eigen::MatrixXd g = m.form.to_double();
  auto orthonormalize = [&](const QMat& block, double sign) {
    Eigen::MatrixXd b = block.to_double();
    if (b.cols() == 0) return b;
    Eigen::MatrixXd gram = sign * (b.transpose() * g * b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    if (es.eigenvalues().minCoeff() <= tol)
      throw std::invalid_argument("flat_frame_adapted: metric not definite on an eigenspace");
    return Eigen::MatrixXd(b * es.operatorInverseSqrt());
  };
  Eigen::MatrixXd t = orthonormalize(cd.t_basis, 1.0);
  Eigen::MatrixXd p = orthonormalize(cd.p_basis, -1.0);
  FlatFrame f;
  f.n = m.dim();
  f.p = static_cast<int>(t.cols());
  f.q = static_cast<int>(p.cols());
  f.basis.resize(f.n, f.n);
  f.basis << t, p;
  f.eta.resize(f.n);
  f.eta.head(f.p).setOnes();
  f.eta.tail(f.q).setConstant(-1.0);
  f.basis_inv = f.eta.asDiagonal() * f.basis.transpose() * g;
  return f;
}

BracketVector bracket_vector(const LieAlgebra& L, const FlatFrame& frame) {
  int n = frame.n;
  if (L.dim() != n) throw std::invalid_argument("bracket_vector: dimension mismatch");
  BracketVector bv;
  bv.frame = frame;
  bv.v.resize(LieAlgebra::pair_count(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd w = frame.basis_inv * L.bracket(Eigen::VectorXd(frame.basis.col(i)),
                                                      Eigen::VectorXd(frame.basis.col(j)));
      bv.v.segment(LieAlgebra::pair_index(i, j, n) * n, n) = w;
    }
  return bv;
}

namespace {

inline Eigen::VectorXd slot(const Eigen::VectorXd& v, int n, int a, int b) {
  if (a == b) return Eigen::VectorXd::Zero(n);
  if (a < b) return v.segment(LieAlgebra::pair_index(a, b, n) * n, n);
  return -v.segment(LieAlgebra::pair_index(b, a, n) * n, n);
}

}  // namespace

Eigen::VectorXd act(const FlatFrame& f, const Eigen::MatrixXd& h, const Eigen::VectorXd& v) {
  int n = f.n;
  Eigen::MatrixXd a = h.inverse();
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
      for (int x = 0; x < n; ++x) {
        if (a(x, i) == 0.0) continue;
        for (int y = 0; y < n; ++y) {
          if (y == x || a(y, j) == 0.0) continue;
          s += a(x, i) * a(y, j) * slot(v, n, x, y);
        }
      }
      out.segment(LieAlgebra::pair_index(i, j, n) * n, n) = h * s;
    }
  return out;
}

Eigen::VectorXd act_infinitesimal(const FlatFrame& f, const Eigen::MatrixXd& X, const Eigen::VectorXd& v) {
  int n = f.n;
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd s = X * slot(v, n, i, j);
      for (int a = 0; a < n; ++a) {
        if (X(a, i) != 0.0) s -= X(a, i) * slot(v, n, a, j);
        if (X(a, j) != 0.0) s -= X(a, j) * slot(v, n, i, a);
      }
      out.segment(LieAlgebra::pair_index(i, j, n) * n, n) = s;
    }
  return out;
}

double theta_norm(const BracketVector& bv) { return bv.v.norm(); }

std::vector<Eigen::MatrixXd> symmetric_isometry_basis(const FlatFrame& f) {
  std::vector<Eigen::MatrixXd> basis;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < f.p; ++a)
    for (int b = f.p; b < f.n; ++b) {
      Eigen::MatrixXd s = Eigen::MatrixXd::Zero(f.n, f.n);
      s(a, b) = inv_sqrt2;
      s(b, a) = inv_sqrt2;
      basis.push_back(s);
    }
  return basis;
}

std::vector<Eigen::MatrixXd> isometry_basis_flat(const FlatFrame& f) {
  std::vector<Eigen::MatrixXd> basis = symmetric_isometry_basis(f);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto rotations = [&](int lo, int hi) {
    for (int a = lo; a < hi; ++a)
      for (int b = a + 1; b < hi; ++b) {
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(f.n, f.n);
        s(a, b) = inv_sqrt2;
        s(b, a) = -inv_sqrt2;
        basis.push_back(s);
      }
  };
  rotations(0, f.p);
  rotations(f.p, f.n);
  return basis;
}

Eigen::MatrixXd moment(const BracketVector& bv) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(bv.frame.n, bv.frame.n);
  for (const auto& s : symmetric_isometry_basis(bv.frame)) {
    double c = act_infinitesimal(bv.frame, s, bv.v).dot(bv.v);
    m += c * s;
  }
  return m;
}

double moment_norm(const BracketVector& bv) { return moment(bv).norm(); }

bool is_minimal(const BracketVector& bv, double tol, int probes, std::uint64_t seed) {
  if (moment_norm(bv) >= tol) return false;
  auto basis = isometry_basis_flat(bv.frame);
  Rng rng(seed);
  double nv = bv.v.norm();
  for (int k = 0; k < probes; ++k) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(bv.frame.n, bv.frame.n);
    for (const auto& b : basis) x += rng.gauss() * b;
    double t = rng.uniform() * 2.0 - 1.0;
    Eigen::MatrixXd e = (t * x).exp();
    if (act(bv.frame, e, bv.v).norm() < nv - tol) return false;
  }
  return true;
}

namespace {

// Snap a numerically found map to exact rationals and verify it as a Lie
// Cartan involution; fall back to the dyadic map verified at tolerance.
std::optional<Involution> verify_candidate(const LieAlgebra& L, const Metric& m, const Eigen::MatrixXd& theta_orig,
                                           double tol) {
  int n = L.dim();
  bool snapped = true;
  QMat snap(n, n);
  for (int i = 0; i < n && snapped; ++i)
    for (int j = 0; j < n; ++j) {
      auto r = snap_to_rational(theta_orig(i, j), 4096, 1e-6);
      if (!r) {
        snapped = false;
        break;
      }
      snap(i, j) = *r;
    }
  if (snapped) {
    LinearMap cand{snap, MapRole::kAutomorphismCandidate, true};
    Involution iv = is_lie_cartan(L, m, cand, tol);
    if (iv.lie_cartan()) return iv;
  }
  LinearMap cand{QMat::from_double(theta_orig), MapRole::kAutomorphismCandidate, false};
  Involution iv = is_lie_cartan(L, m, cand, std::max(tol, 1e-8));
  if (iv.lie_cartan()) return iv;
  return std::nullopt;
}

FlowResult run_flow(const LieAlgebra& L, const Metric& m, const BracketVector& start, const Eigen::MatrixXd& pre,
                    const FlowConfig& cfg) {
  const FlatFrame& f = start.frame;
  FlowResult res;
  res.transporter = pre;
  Eigen::VectorXd v = start.v;
  double anorm = 0.0;
  BracketVector cur{f, v};
  int it = 0;
  std::string stop;
  for (;; ++it) {
    cur.v = v;
    Eigen::MatrixXd mom = moment(cur);
    double mn = mom.norm();
    double nv = v.norm();
    if (!std::isfinite(mn) || !std::isfinite(nv))
      throw std::runtime_error("minimal_vector_flow: non-finite values (iteration " + std::to_string(it) + ")");
    res.log.push_back(FlowLogEntry{it, nv, mn});
    if (mn < cfg.tol_moment) {
      res.status = FlowStatus::kMinimalVectorFound;
      break;
    }
    if (anorm > cfg.divergence_bound) {
      res.status = FlowStatus::kNoCertificate;
      stop = "transporter coordinates exceeded divergence bound";
      break;
    }
    if (it >= cfg.max_iters) {
      res.status = FlowStatus::kNoCertificate;
      stop = "iteration budget exhausted";
      break;
    }
    double s = cfg.step;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, s *= 0.5) {
      Eigen::MatrixXd e = (-s * mom).exp();
      Eigen::VectorXd vn = act(f, e, v);
      if (vn.norm() <= nv) {
        v = vn;
        res.transporter = e * res.transporter;
        anorm += s * mn;
        moved = true;
        break;
      }
    }
    if (!moved) {
      res.status = FlowStatus::kNoCertificate;
      stop = "no descent step found (norm plateau at moment norm " + std::to_string(mn) + ")";
      break;
    }
  }
  res.v_final = v;
  res.final_norm = v.norm();
  res.final_moment_norm = res.log.empty() ? 0.0 : res.log.back().moment_norm;
  res.transporter_coordinate_norm = anorm;
  res.diagnostic = stop;

  if (res.status == FlowStatus::kMinimalVectorFound) {
    // theta0 fixing the limit upgrades the run to a Cartan certificate.
    Eigen::MatrixXd eta = f.theta0_flat();
    double fix = (act(f, eta, v) - v).norm();
    if (fix <= std::max(1e-8, 100.0 * cfg.tol_moment)) {
      Eigen::MatrixXd hinv = res.transporter.inverse();
      Eigen::MatrixXd theta_flat = hinv * eta * res.transporter;
      auto iv = verify_candidate(L, m, f.to_original(theta_flat), 1e-7);
      if (iv) {
        res.status = FlowStatus::kCartanFound;
        res.recovered_theta = *iv;
      }
    }
  }
  return res;
}

}  // namespace

FlowResult minimal_vector_flow(const LieAlgebra& L, const Metric& m, const FlowConfig& cfg, const LinearMap* theta0) {
  FlatFrame f = theta0 ? flat_frame_adapted(m, *theta0) : flat_frame_from_metric(m);
  BracketVector bv = bracket_vector(L, f);
  return run_flow(L, m, bv, Eigen::MatrixXd::Identity(f.n, f.n), cfg);
}

FlowResult minimal_vector_flow_from(const LieAlgebra& L, const Metric& m, const BracketVector& start,
                                    const Eigen::MatrixXd& pre_transporter, const FlowConfig& cfg) {
  return run_flow(L, m, start, pre_transporter, cfg);
}

FindResult find_lie_cartan(const LieAlgebra& L, const Metric& m, SearchBudget budget, std::uint64_t seed, double tol) {
  FlatFrame f = flat_frame_from_metric(m);
  BracketVector mu = bracket_vector(L, f);
  auto sym = symmetric_isometry_basis(f);
  int d = static_cast<int>(sym.size());
  FindResult out;

  auto theta_of = [&](const Eigen::VectorXd& x) {
    Eigen::MatrixXd xm = Eigen::MatrixXd::Zero(f.n, f.n);
    for (int i = 0; i < d; ++i) xm += x[i] * sym[static_cast<std::size_t>(i)];
    Eigen::MatrixXd e = xm.exp();
    Eigen::MatrixXd einv = (-xm).exp();
    return Eigen::MatrixXd(e * f.theta0_flat() * einv);
  };
  auto residual = [&](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(act(f, theta_of(x), mu.v) - mu.v);
  };

  double accept = std::max(tol, 1e-9) * std::max(1.0, mu.v.norm());
  Rng rng(seed);
  const double scales[3] = {0.3, 1.0, 3.0};
  for (int s = 0; s < std::max(1, budget.starts); ++s) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(d);
    if (s > 0 && d > 0) x0 = scales[(s - 1) % 3] * rng.gauss_vector(d);
    LmOptions opts;
    opts.max_iters = budget.iterations;
    opts.cost_tol = accept * accept * 1e-4;
    LmResult lm = levenberg_marquardt(residual, x0, opts);
    double resid = std::sqrt(lm.cost);
    if (resid < out.best_residual) {
      out.best_residual = resid;
      out.best_start = s;
    }
    if (resid <= accept) {
      auto iv = verify_candidate(L, m, f.to_original(theta_of(lm.x)), tol);
      if (iv) {
        out.theta = *iv;
        out.best_residual = resid;
        out.best_start = s;
        return out;
      }
    }
    if (d == 0) break;  // definite metric: the reference involution is the only candidate
  }
  return out;
}

}  // namespace wickrot
