#include "renyi/optimize.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "renyi/linalg.hpp"
#include "renyi/rng.hpp"

namespace renyi {

namespace {

// traceless Hermitian basis (generalized Gell-Mann), Frobenius-normalized
std::vector<Matrix> hermitian_basis(Eigen::Index d) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<size_t>(d * d - 1));
  const double s = M_SQRT1_2;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      Matrix re = Matrix::Zero(d, d);
      re(i, j) = s;
      re(j, i) = s;
      basis.push_back(re);
      Matrix im = Matrix::Zero(d, d);
      im(i, j) = cplx(0, -s);
      im(j, i) = cplx(0, s);
      basis.push_back(im);
    }
  for (Eigen::Index k = 1; k < d; ++k) {
    Matrix diag = Matrix::Zero(d, d);
    double norm = 1.0 / std::sqrt(double(k) * double(k + 1));
    for (Eigen::Index i = 0; i < k; ++i) diag(i, i) = norm;
    diag(k, k) = -double(k) * norm;
    basis.push_back(diag);
  }
  return basis;
}

Matrix density_from_log(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector lam = es.eigenvalues();
  double shift = lam.maxCoeff();
  RealVector w = (lam.array() - shift).exp();
  double z = w.sum();
  Matrix rho = es.eigenvectors() * (w / z).asDiagonal() * es.eigenvectors().adjoint();
  return 0.5 * (rho + rho.adjoint());
}

Matrix log_of_density(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  RealVector lam = es.eigenvalues();
  double floor = std::max(lam.maxCoeff(), 1.0) * 1e-14;
  RealVector l(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    l(i) = std::log(std::max(lam(i), floor));
  Matrix h = es.eigenvectors() * l.asDiagonal() * es.eigenvectors().adjoint();
  h -= (h.trace() / double(h.rows())) * Matrix::Identity(h.rows(), h.cols());
  return 0.5 * (h + h.adjoint());
}

struct RestartOutcome {
  Matrix h;
  double g = 0.0;  // objective in minimization sense
  int iterations = 0;
  bool converged = false;
};

RestartOutcome run_descent(const std::function<double(const Matrix&)>& g,
                           const std::vector<Matrix>& basis, Matrix h,
                           const SimplexOptConfig& cfg) {
  RestartOutcome out;
  double f_cur = g(density_from_log(h));
  if (!std::isfinite(f_cur)) {
    h = Matrix::Zero(h.rows(), h.cols());
    f_cur = g(density_from_log(h));
  }
  double eta = 1.0;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    ++out.iterations;
    double step = cfg.fd_step * (1.0 + h.cwiseAbs().maxCoeff());
    Matrix grad = Matrix::Zero(h.rows(), h.cols());
    double gn2 = 0.0;
    for (const Matrix& e : basis) {
      double fp = g(density_from_log(h + step * e));
      double fm = g(density_from_log(h - step * e));
      if (!std::isfinite(fp) || !std::isfinite(fm)) continue;
      double gk = (fp - fm) / (2.0 * step);
      grad += gk * e;
      gn2 += gk * gk;
    }
    if (gn2 <= 0.0) {
      out.converged = true;
      break;
    }

    double try_eta = eta * 2.0;
    bool accepted = false;
    Matrix h_new;
    double f_new = f_cur;
    for (int ls = 0; ls < 60; ++ls) {
      h_new = h - try_eta * grad;
      double f = g(density_from_log(h_new));
      if (std::isfinite(f) && f < f_cur - 1e-4 * try_eta * gn2) {
        f_new = f;
        accepted = true;
        break;
      }
      try_eta *= 0.5;
    }
    if (!accepted) {
      out.converged = true;  // no descent within finite-difference resolution
      break;
    }
    double improvement = f_cur - f_new;
    h = h_new;
    h -= (h.trace() / double(h.rows())) * Matrix::Identity(h.rows(), h.cols());
    f_cur = f_new;
    eta = try_eta;
    if (improvement < cfg.tol_objective) {
      out.converged = true;
      break;
    }
  }
  out.h = h;
  out.g = f_cur;
  return out;
}

}  // namespace

OptResult optimize_over_density(const DensityObjective& objective, Eigen::Index dim,
                                const SimplexOptConfig& cfg, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("optimize_over_density: bad dimension");
  if (cfg.tol_objective <= 0.0 || cfg.max_iters < 1)
    throw std::invalid_argument("optimize_over_density: bad config");
  if (dim == 1) {
    Matrix one = Matrix::Identity(1, 1);
    return {one, objective(one), 0, true};
  }

  const double sgn = (cfg.sense == SimplexOptConfig::Sense::minimize) ? 1.0 : -1.0;
  auto g = [&](const Matrix& rho) {
    double f = objective(rho);
    return std::isfinite(f) ? sgn * f : kInf;
  };

  auto basis = hermitian_basis(dim);
  Rng rng(seed);

  OptResult best;
  double best_g = kInf;
  int total_iters = 0;

  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    Matrix h0;
    if (r < static_cast<int>(cfg.warm_starts.size())) {
      h0 = log_of_density(cfg.warm_starts[static_cast<size_t>(r)]);
    } else if (r == static_cast<int>(cfg.warm_starts.size())) {
      h0 = Matrix::Zero(dim, dim);
    } else {
      h0 = Matrix::Zero(dim, dim);
      for (const Matrix& e : basis) h0 += rng.normal() * e;
    }
    RestartOutcome o = run_descent(g, basis, std::move(h0), cfg);
    total_iters += o.iterations;
    if (o.g < best_g || best.optimizer.size() == 0) {
      best_g = o.g;
      best.optimizer = density_from_log(o.h);
      best.converged = o.converged;
    }
  }
  best.iterations = total_iters;
  best.value = sgn * best_g;
  return best;
}

OptResult qubit_grid_oracle(const DensityObjective& objective, int resolution,
                            SimplexOptConfig::Sense sense) {
  if (resolution < 2) throw std::invalid_argument("qubit_grid_oracle: resolution too small");
  const double sgn = (sense == SimplexOptConfig::Sense::minimize) ? 1.0 : -1.0;

  Matrix sx(2, 2), sy(2, 2), sz(2, 2), id = Matrix::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  sz << 1, 0, 0, -1;

  OptResult best;
  double best_g = kInf;
  int count = 0;
  for (int ir = 0; ir < resolution; ++ir) {
    double r = double(ir) / double(resolution - 1);
    for (int it = 0; it < resolution; ++it) {
      double theta = M_PI * double(it) / double(resolution - 1);
      for (int ip = 0; ip < resolution; ++ip) {
        double phi = 2.0 * M_PI * double(ip) / double(resolution);
        double x = r * std::sin(theta) * std::cos(phi);
        double y = r * std::sin(theta) * std::sin(phi);
        double z = r * std::cos(theta);
        Matrix sigma = 0.5 * (id + x * sx + y * sy + z * sz);
        double f = objective(sigma);
        ++count;
        double gv = std::isfinite(f) ? sgn * f : kInf;
        if (gv < best_g || best.optimizer.size() == 0) {
          best_g = gv;
          best.optimizer = sigma;
          best.value = f;
        }
        if (r == 0.0) break;  // center point: angles are redundant
      }
      if (r == 0.0) break;
    }
  }
  best.iterations = count;
  best.converged = true;
  return best;
}

}  // namespace renyi
