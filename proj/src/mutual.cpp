#include "renyi/mutual.hpp"

#include <cmath>

#include "renyi/rng.hpp"

namespace renyi {

namespace {

struct HalfStep {
  Matrix optimizer;
  double value = 0.0;
  bool converged = true;
};

HalfStep minimize_side(const DensityMatrix& rho, const Matrix& fixed_ref,
                       const Matrix& warm, RenyiOrder alpha, const OptBudget& budget,
                       std::uint64_t seed) {
  ProductRefDivergence div(rho, fixed_ref, alpha);
  SimplexOptConfig cfg = budget.to_config(SimplexOptConfig::Sense::minimize);
  cfg.restarts = 1;
  cfg.warm_starts = {warm};
  OptResult res = optimize_over_density([&](const Matrix& s) { return div(s); },
                                        rho.shape[1], cfg, seed);
  return {res.optimizer, res.value, res.converged};
}

}  // namespace

Bits mutual_info_given(const DensityMatrix& rho_ab, const Matrix& tau_a, RenyiOrder alpha,
                       const OptBudget& budget) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("mutual_info_given: state must be bipartite");
  ProductRefDivergence div(rho_ab, tau_a, alpha);
  DensityMatrix rho_b = rho_ab.marginal({1});

  SimplexOptConfig cfg = budget.to_config(SimplexOptConfig::Sense::minimize);
  cfg.warm_starts = {rho_b.mat};
  OptResult res = optimize_over_density([&](const Matrix& s) { return div(s); },
                                        rho_ab.shape[1], cfg, budget.seed);
  if (budget.oracle_polish && rho_ab.shape[1] == 2) {
    OptResult grid = qubit_grid_oracle([&](const Matrix& s) { return div(s); }, 60);
    if (grid.value < res.value) res = grid;
  }
  if (!res.converged)
    throw ConvergenceError("mutual_info_given: optimizer did not converge", res);
  return res.value;
}

Bits mutual_info(const DensityMatrix& rho_ab, RenyiOrder alpha, MutualVariant variant,
                 const OptBudget& budget) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("mutual_info: state must be bipartite");
  DensityMatrix rho_a = rho_ab.marginal({0});
  if (variant == MutualVariant::up) return mutual_info_given(rho_ab, rho_a.mat, alpha, budget);

  DensityMatrix rho_b = rho_ab.marginal({1});
  DensityMatrix swapped = rho_ab.swapped();
  Rng rng(Rng::derive(budget.seed, 0x1d));

  double best = kInf;
  bool best_converged = false;
  const int restarts = std::max(1, budget.restarts);
  for (int r = 0; r < restarts; ++r) {
    Matrix sa = rho_a.mat, sb = rho_b.mat;
    if (r > 0) {
      sa = random_state(StateKind::hs_mixed, Shape{rho_ab.shape[0]}, rng.next_u64()).mat;
      sb = random_state(StateKind::hs_mixed, Shape{rho_ab.shape[1]}, rng.next_u64()).mat;
    }
    double joint = kInf;
    bool converged = false;
    for (int sweep = 0; sweep < 60; ++sweep) {
      HalfStep hb = minimize_side(rho_ab, sa, sb, alpha, budget,
                                  Rng::derive(budget.seed, 2 * sweep + 100 * r));
      sb = hb.optimizer;
      HalfStep ha = minimize_side(swapped, sb, sa, alpha, budget,
                                  Rng::derive(budget.seed, 2 * sweep + 1 + 100 * r));
      sa = ha.optimizer;
      double next = ha.value;
      if (std::abs(joint - next) < 1e-9) {
        joint = std::min(joint, next);
        converged = hb.converged && ha.converged;
        break;
      }
      joint = next;
    }
    if (joint < best) {
      best = joint;
      best_converged = converged;
    }
  }
  if (!best_converged)
    throw ConvergenceError("mutual_info: alternating minimization did not converge",
                           OptResult{Matrix(), best, 0, false});
  return best;
}

double duality_gap(const DensityMatrix& rho_abc, const DensityMatrix& tau_a,
                   RenyiOrder alpha, const OptBudget& budget) {
  if (rho_abc.shape.rank() != 3)
    throw std::invalid_argument("duality_gap: state must be tripartite");
  if (!rho_abc.is_pure())
    throw std::invalid_argument("duality_gap: state must be pure");
  if (alpha.value < 0.5)
    throw std::invalid_argument("duality_gap: order must be >= 1/2");
  if (tau_a.dim() != rho_abc.shape[0])
    throw std::invalid_argument("duality_gap: tau_A dimension mismatch");
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(tau_a.mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= kKernelCut)
      throw std::invalid_argument("duality_gap: tau_A must be full rank");
  }

  DensityMatrix rho_ab = rho_abc.marginal({0, 1});
  DensityMatrix rho_ac = rho_abc.marginal({0, 2});
  Matrix tau_inv = mat_power_on_support(tau_a.mat, -1.0);

  Bits i_ab = mutual_info_given(rho_ab, tau_a.mat, alpha, budget);
  Bits i_ac = mutual_info_given(rho_ac, tau_inv, alpha.hat(), budget);
  return i_ab + i_ac;
}

}  // namespace renyi
