#pragma once

#include "renyi/optimize.hpp"
#include "renyi/orders.hpp"
#include "renyi/states.hpp"

namespace renyi {

// Sandwiched Renyi divergence in bits. sigma is any PSD matrix (unit trace is
// not required). Returns +inf exactly when rho _|_ sigma, or when alpha >= 1
// and sigma fails to dominate rho. alpha = 1 evaluates Umegaki's relative
// entropy, alpha = inf the max-divergence log2 ||sigma^-1/2 rho sigma^-1/2||.
Bits renyi_divergence(const DensityMatrix& rho, const Matrix& sigma, RenyiOrder alpha,
                      double kernel_cut = kKernelCut);

// H_alpha = (1/(1-alpha)) log2 tr rho^alpha; alpha 1, 1/2, 2, inf handled as
// von Neumann, max-, collision- and min-entropy.
Bits renyi_entropy(const DensityMatrix& rho, RenyiOrder alpha);

// Generalized conditional entropy of the first subsystem given the second:
// H_alpha(rho_AB || tau_B) = -D_alpha(rho_AB || id_A (x) tau_B).
Bits cond_entropy_given(const DensityMatrix& rho_ab, const Matrix& tau_b, RenyiOrder alpha);

enum class CondVariant { down, up };

// Optimizer knobs threaded through optimizer-backed entropic quantities.
struct OptBudget {
  double tol = 1e-10;
  int max_iters = 4000;
  int restarts = 2;
  std::uint64_t seed = 0;
  // cross-check qubit-dimension optimizations against the exhaustive grid
  bool oracle_polish = false;

  SimplexOptConfig to_config(SimplexOptConfig::Sense sense) const {
    SimplexOptConfig cfg;
    cfg.tol_objective = tol;
    cfg.max_iters = max_iters;
    cfg.restarts = restarts;
    cfg.sense = sense;
    return cfg;
  }
};

// H^down/up_alpha(A|B) with A the first subsystem. The up variant takes the
// supremum of the generalized form over D(B) and throws ConvergenceError
// (carrying the last iterate) if the optimizer fails.
Bits cond_entropy(const DensityMatrix& rho_ab, RenyiOrder alpha, CondVariant variant,
                  const OptBudget& budget = {});

// Repeated evaluation of sigma_B |-> D_alpha(rho_AB || K_A (x) sigma_B) with
// the K_A-side power precomputed. Assumes sigma_B is strictly positive (the
// optimizer's iterates are); use renyi_divergence for general references.
class ProductRefDivergence {
 public:
  ProductRefDivergence(const DensityMatrix& rho_ab, Matrix k_a, RenyiOrder alpha,
                       double kernel_cut = kKernelCut);

  double operator()(const Matrix& sigma_b) const;

 private:
  Matrix rho_;
  Matrix ka_pow_;           // K_A^(-alpha'/2), or K_A^(-1/2) at alpha = inf
  double alpha_;            // +inf allowed
  double exponent_ = 0.0;   // -alpha'/2
  Eigen::Index da_ = 0, db_ = 0;
  bool dominated_ = true;   // supp(rho) inside supp(K_A) (x) B
  double kernel_cut_;
  // alpha = 1 pieces: D = c_rho_ - c_ka_ - tr[rho_B log2 sigma]
  double c_rho_ = 0.0, c_ka_ = 0.0;
  Matrix rho_b_;
};

}  // namespace renyi
