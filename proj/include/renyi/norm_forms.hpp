#pragma once

#include "renyi/entropies.hpp"
#include "renyi/mutual.hpp"

namespace renyi {

enum class NormFormKind { conditional, entropy, mutual };

// Entropic quantities evaluated through Schatten norms of X = Op(|phi>),
// where |phi> purifies rho_AB on ABC and X maps B to AC:
//   entropy:     -log2 ||X||_{2a}^{2/a'}                      = H_a(B)
//   conditional: -log2 sup_{tau_C} ||(s_A^-1 (x) tau_C)^{a'/2} X||_2^{2/a'}
//                                                             = H_a(rho_AB || s_A)
//   mutual:       log2 sup_{tau_C} ||(s_A^-1 (x) tau_C)^{a'/2} X||_{2a^}^{2/a'}
//                                                             = I_a(rho_AB || s_A)
// The signed exponent 2/a' stays inside the sup, so for a < 1 the expression
// is an infimum of the norm, evaluated literally. sigma_a defaults to the A
// marginal. The sup over tau_C runs through the density optimizer; a = 1 is
// rejected (the forms are undefined there) and the mutual form requires
// a >= 1/2.
Bits norm_form_value(const DensityMatrix& rho_ab, RenyiOrder alpha, NormFormKind kind,
                     const Matrix* sigma_a = nullptr, const OptBudget& budget = {});

}  // namespace renyi
