#include "renyi/entropies.hpp"

#include <cmath>

namespace renyi {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// sum of lambda^alpha over the support of a Hermitian PSD spectrum
double power_trace(const RealVector& lam, double alpha, double kernel_cut) {
  double lmax = lam.maxCoeff();
  double cut = kernel_cut * std::max(lmax, 0.0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > cut) acc += std::pow(lam(i), alpha);
  return acc;
}

}  // namespace

Bits renyi_divergence(const DensityMatrix& rho, const Matrix& sigma, RenyiOrder alpha,
                      double kernel_cut) {
  Matrix sig = hermitized(sigma);
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sig, Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    if (es.eigenvalues().minCoeff() < -kHermTol * std::max(1.0, lmax))
      throw std::invalid_argument("renyi_divergence: sigma is not PSD");
  }
  if (sig.rows() != rho.dim())
    throw std::invalid_argument("renyi_divergence: dimension mismatch");

  SupportRelation rel = support_relation(rho.mat, sig, kernel_cut);
  if (rel.perpendicular) return kInf;
  if (alpha.value >= 1.0 && !rel.dominates) return kInf;

  if (alpha.is_one()) {
    EigSystem er = eig_hermitian(rho.mat);
    double h = 0.0;
    for (Eigen::Index i = 0; i < er.values.size(); ++i) h += xlog2x(std::max(er.values(i), 0.0));
    EigSystem es = eig_hermitian(sig);
    double cut = kernel_cut * std::max(es.values.maxCoeff(), 0.0);
    double cross = 0.0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
      if (es.values(i) <= cut) continue;
      double w = (es.vectors.col(i).adjoint() * rho.mat * es.vectors.col(i))(0).real();
      cross += w * std::log2(es.values(i));
    }
    return h - cross;
  }

  if (alpha.is_inf()) {
    Matrix inv_sqrt = mat_power_on_support(sig, -0.5, kernel_cut);
    Matrix s = inv_sqrt * rho.mat * inv_sqrt;
    EigSystem es = eig_hermitian(0.5 * (s + s.adjoint()));
    return std::log2(std::max(es.values.maxCoeff(), 0.0));
  }

  double a = alpha.value;
  double expo = (1.0 - a) / (2.0 * a);  // = -alpha'/2
  Matrix sig_pow = mat_power_on_support(sig, expo, kernel_cut);
  Matrix s = sig_pow * rho.mat * sig_pow;
  EigSystem es = eig_hermitian(0.5 * (s + s.adjoint()));
  double t = power_trace(es.values, a, kernel_cut);
  if (t <= 0.0) return kInf;
  return std::log2(t) / (a - 1.0);
}

Bits renyi_entropy(const DensityMatrix& rho, RenyiOrder alpha) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat, Eigen::EigenvaluesOnly);
  RealVector p = es.eigenvalues().cwiseMax(0.0);
  if (alpha.is_one()) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) h -= xlog2x(p(i));
    return h;
  }
  if (alpha.is_inf()) return -std::log2(p.maxCoeff());
  double t = power_trace(p, alpha.value, kKernelCut);
  return std::log2(t) / (1.0 - alpha.value);
}

Bits cond_entropy_given(const DensityMatrix& rho_ab, const Matrix& tau_b, RenyiOrder alpha) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("cond_entropy_given: state must be bipartite");
  Matrix ref = tensor_product(Matrix::Identity(rho_ab.shape[0], rho_ab.shape[0]), tau_b);
  return -renyi_divergence(rho_ab, ref, alpha);
}

ProductRefDivergence::ProductRefDivergence(const DensityMatrix& rho_ab, Matrix k_a,
                                           RenyiOrder alpha, double kernel_cut)
    : rho_(rho_ab.mat), alpha_(alpha.value), kernel_cut_(kernel_cut) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("ProductRefDivergence: state must be bipartite");
  da_ = rho_ab.shape[0];
  db_ = rho_ab.shape[1];
  if (k_a.rows() != da_ || k_a.cols() != da_)
    throw std::invalid_argument("ProductRefDivergence: reference dimension mismatch");

  Matrix id_b = Matrix::Identity(db_, db_);
  dominated_ = support_relation(rho_, tensor_product(k_a, id_b), kernel_cut_).dominates;

  if (alpha_ == 1.0) {
    EigSystem er = eig_hermitian(rho_);
    c_rho_ = 0.0;
    for (Eigen::Index i = 0; i < er.values.size(); ++i)
      c_rho_ += xlog2x(std::max(er.values(i), 0.0));
    EigSystem ek = eig_hermitian(k_a);
    double cut = kernel_cut_ * std::max(ek.values.maxCoeff(), 0.0);
    Matrix rho_a = partial_trace(rho_, rho_ab.shape, {0});
    c_ka_ = 0.0;
    for (Eigen::Index i = 0; i < ek.values.size(); ++i) {
      if (ek.values(i) <= cut) continue;
      double w = (ek.vectors.col(i).adjoint() * rho_a * ek.vectors.col(i))(0).real();
      c_ka_ += w * std::log2(ek.values(i));
    }
    rho_b_ = partial_trace(rho_, rho_ab.shape, {1});
    return;
  }

  exponent_ = std::isinf(alpha_) ? -0.5 : (1.0 - alpha_) / (2.0 * alpha_);
  ka_pow_ = mat_power_on_support(k_a, exponent_, kernel_cut_);
  rho_b_ = partial_trace(rho_, rho_ab.shape, {1});
}

double ProductRefDivergence::operator()(const Matrix& sigma_b) const {
  if (alpha_ >= 1.0 && !dominated_) return kInf;

  if (alpha_ == 1.0) {
    EigSystem es = eig_hermitian(sigma_b);
    double cut = kernel_cut_ * std::max(es.values.maxCoeff(), 0.0);
    double cross = 0.0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
      if (es.values(i) <= cut) continue;
      double w = (es.vectors.col(i).adjoint() * rho_b_ * es.vectors.col(i))(0).real();
      cross += w * std::log2(es.values(i));
    }
    return c_rho_ - c_ka_ - cross;
  }

  Matrix sb_pow = mat_power_on_support(sigma_b, exponent_, kernel_cut_);
  Matrix m = tensor_product(ka_pow_, sb_pow);
  Matrix s = m * rho_ * m;
  EigSystem es = eig_hermitian(0.5 * (s + s.adjoint()));

  if (std::isinf(alpha_)) return std::log2(std::max(es.values.maxCoeff(), 0.0));

  double t = power_trace(es.values, alpha_, kernel_cut_);
  if (t <= 0.0) return kInf;
  return std::log2(t) / (alpha_ - 1.0);
}

Bits cond_entropy(const DensityMatrix& rho_ab, RenyiOrder alpha, CondVariant variant,
                  const OptBudget& budget) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("cond_entropy: state must be bipartite");
  const Eigen::Index da = rho_ab.shape[0];
  DensityMatrix rho_b = rho_ab.marginal({1});

  ProductRefDivergence div(rho_ab, Matrix::Identity(da, da), alpha);
  if (variant == CondVariant::down) return -div(rho_b.mat);

  SimplexOptConfig cfg = budget.to_config(SimplexOptConfig::Sense::minimize);
  cfg.warm_starts = {rho_b.mat};
  OptResult res = optimize_over_density([&](const Matrix& s) { return div(s); },
                                        rho_ab.shape[1], cfg, budget.seed);
  if (budget.oracle_polish && rho_ab.shape[1] == 2) {
    OptResult grid = qubit_grid_oracle([&](const Matrix& s) { return div(s); }, 60);
    if (grid.value < res.value) res = grid;
  }
  if (!res.converged)
    throw ConvergenceError("cond_entropy: optimizer did not converge", res);
  return -res.value;
}

}  // namespace renyi
