#include "renyi/norm_forms.hpp"

#include <cmath>

namespace renyi {

namespace {

// Schatten p-norm from the Gram matrix Y^dag Y (cheaper: the input side is
// the small dimension here).
double schatten_from_gram(const Matrix& y, double p) {
  Matrix gram = y.adjoint() * y;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gram + gram.adjoint()),
                                           Eigen::EigenvaluesOnly);
  RealVector g = es.eigenvalues().cwiseMax(0.0);
  if (std::isinf(p)) return std::sqrt(g.maxCoeff());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) acc += std::pow(g(i), p / 2.0);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

Bits norm_form_value(const DensityMatrix& rho_ab, RenyiOrder alpha, NormFormKind kind,
                     const Matrix* sigma_a, const OptBudget& budget) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("norm_form_value: state must be bipartite");
  if (alpha.is_one())
    throw std::invalid_argument("norm_form_value: undefined at order 1");
  if (kind == NormFormKind::mutual && alpha.value < 0.5)
    throw std::invalid_argument("norm_form_value: mutual form needs order >= 1/2");

  const Eigen::Index da = rho_ab.shape[0];
  const Eigen::Index db = rho_ab.shape[1];
  const Eigen::Index dc = da * db;
  const double ap = alpha.prime();

  Matrix sa = sigma_a ? *sigma_a : rho_ab.marginal({0}).mat;
  if (sa.rows() != da || sa.cols() != da)
    throw std::invalid_argument("norm_form_value: sigma_A dimension mismatch");

  Vector phi = purify_vector(rho_ab);
  OperatorForm x = op_vec(phi, Shape{da, db, dc}, 1);

  if (kind == NormFormKind::entropy)
    return -(2.0 / ap) * std::log2(schatten_from_gram(x.mat, 2.0 * alpha.value));

  if (!support_relation(rho_ab.mat, tensor_product(sa, Matrix::Identity(db, db))).dominates)
    throw std::invalid_argument("norm_form_value: sigma_A (x) id does not dominate the state");

  const double p = (kind == NormFormKind::conditional) ? 2.0 : 2.0 * alpha.hat().value;
  Matrix sa_pow = mat_power_on_support(sa, -ap / 2.0);

  // log2 of the literal expression ||(s_A^-1 (x) tau)^{a'/2} X||_p^{2/a'},
  // maximized over tau in D(C)
  auto objective = [&](const Matrix& tau) -> double {
    Matrix tau_pow = mat_power_on_support(tau, ap / 2.0);
    Matrix y = tensor_product(sa_pow, tau_pow) * x.mat;
    double nrm = schatten_from_gram(y, p);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) return -kInf;
    return (2.0 / ap) * std::log2(nrm);
  };

  // warm starts: the C marginal of the purification, and the closed-form
  // maximizer K^alpha/tr of the p = 2 case (exact for the conditional form)
  std::vector<Matrix> warm;
  {
    Matrix phi_rho = phi * phi.adjoint();
    Shape abc{da, db, dc};
    warm.push_back(partial_trace(phi_rho, abc, {2}));
    Vector z = tensor_product(mat_power_on_support(sa, -ap / 2.0),
                              Matrix::Identity(db * dc, db * dc)) *
               phi;
    Matrix k = partial_trace(z * z.adjoint(), abc, {2});
    double tr = k.trace().real();
    if (tr > 0.0) {
      Matrix cand = mat_power_on_support(k / tr, alpha.value);
      double ct = cand.trace().real();
      if (ct > 0.0) warm.push_back(cand / ct);
    }
  }

  SimplexOptConfig cfg = budget.to_config(SimplexOptConfig::Sense::maximize);
  cfg.restarts = std::max(budget.restarts, static_cast<int>(warm.size()) + 1);
  cfg.warm_starts = std::move(warm);
  OptResult res = optimize_over_density(objective, dc, cfg, budget.seed);
  if (!res.converged)
    throw ConvergenceError("norm_form_value: optimizer did not converge", res);

  return (kind == NormFormKind::conditional) ? -res.value : res.value;
}

}  // namespace renyi
