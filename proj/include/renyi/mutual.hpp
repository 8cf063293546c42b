#pragma once

#include "renyi/entropies.hpp"

namespace renyi {

enum class MutualVariant { up, down };

// up:   inf over sigma_B of D_alpha(rho_AB || rho_A (x) sigma_B); fixes the
//       first subsystem's marginal, so it is not symmetric in its arguments.
// down: joint inf over sigma_A and sigma_B via alternating minimization,
//       initialized at (rho_A, rho_B); symmetric.
// Throws ConvergenceError (with the last iterate) when the optimizer fails.
Bits mutual_info(const DensityMatrix& rho_ab, RenyiOrder alpha, MutualVariant variant,
                 const OptBudget& budget = {});

// Generalized form: inf over sigma_B of D_alpha(rho_AB || tau_A (x) sigma_B).
// tau_A is any PSD matrix; it need not be normalized (the duality relation
// feeds tau_A^-1 here).
Bits mutual_info_given(const DensityMatrix& rho_ab, const Matrix& tau_a, RenyiOrder alpha,
                       const OptBudget& budget = {});

// I_alpha(rho_AB || tau_A) + I_alpha^(rho_AC || tau_A^-1) for a pure state on
// ABC; zero up to optimizer accuracy. tau_A must be full rank on supp(rho_A).
double duality_gap(const DensityMatrix& rho_abc, const DensityMatrix& tau_a,
                   RenyiOrder alpha, const OptBudget& budget = {});

}  // namespace renyi
