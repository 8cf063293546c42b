#pragma once

#include <string>
#include <vector>

#include "renyi/mutual.hpp"
#include "renyi/norm_forms.hpp"

namespace renyi {

// One verified inequality instance; margin >= 0 means the claim held.
// `certified` only when every optimizer-approximated term sits on the side
// that can only make the test stricter (optimizer infima are upper bounds,
// spectral quantities are exact to float precision).
struct InequalityRecord {
  std::string suite;
  std::string name;
  double alpha = kNaN, beta = kNaN, gamma = kNaN, delta = kNaN;
  int dim_a = 0, dim_b = 0;
  std::uint64_t state_seed = 0;
  long trial = -1;
  Bits lhs_bits = 0.0;
  Bits rhs_bits = 0.0;
  Bits margin_bits = 0.0;
  enum class Side { certified, heuristic };
  Side soundness = Side::certified;
  bool converged = true;
  bool counterexample_candidate = false;
};

struct VerifyOptions {
  double tolerance_bits = 1e-6;
  OptBudget budget{};
  // failed margins re-run at tighter optimizer precision (and against the
  // qubit grid oracle where applicable) before being flagged
  bool violation_recheck = true;
};

// The four decomposition inequalities; direction dictated by the sign of
// (a-1)(b-1)(g-1):
//   up_lower:   I^up_g(A;B)  >= H_b(B) - H^down_a(B|A)   (sign positive)
//   down_lower: I^down_g(A:B) >= H_b(B) - H^up_a(B|A)    (sign positive)
//   up_upper:   I^up_g(A;B)  <= H_b(B) - H^down_a(B|A)   (sign negative)
//   down_upper: I^down_g(A:B) <= H_b(B) - H^up_a(B|A)    (sign negative)
// swap_ab exchanges the roles of A and B on the right-hand side and is only
// permitted for the symmetric I^down forms. The all-ones triple is accepted
// as the order-1 equality limit.
enum class DecompForm { up_lower, down_lower, up_upper, down_upper };

InequalityRecord verify_decomposition(const DensityMatrix& rho_ab, RenyiOrder a,
                                      RenyiOrder b, RenyiOrder g, DecompForm form,
                                      bool swap_ab = false, const VerifyOptions& opt = {});

// Same claims under the relaxed relation (>= for the lower forms, <= for the
// upper forms, by monotonicity in the order); the orders must still lie in a
// valid case range with the matching sign.
InequalityRecord verify_decomposition_relaxed(const DensityMatrix& rho_ab, RenyiOrder a,
                                              RenyiOrder b, RenyiOrder g, DecompForm form,
                                              bool swap_ab = false,
                                              const VerifyOptions& opt = {});

// Joint-entropy decomposition for a quad with 1/d' = 1/a' + 1/b' + 1/g':
//   lower (d < a,b,g): I^down_g(A:B) >= H_a(A) + H_b(B) - H_d(AB)
//   upper (d > a,b,g): I^up_g(A;B)  <= H_a(A) + H_b(B) - H_d(AB)
enum class JointDirection { lower, upper };

InequalityRecord verify_joint_decomposition(const DensityMatrix& rho_ab,
                                            const OrderQuad& quad, JointDirection dir,
                                            const VerifyOptions& opt = {});

// Conditional-entropy chain rules:
//   up (sign positive):   H^up_b(A|B)   <= H_a(AB) - H_g(B)
//   down (sign negative): H^down_b(B|A) >= H_a(AB) - H_g(A)
//   generalized (pure tripartite rho and sigma, flipped relation
//   a/(a-1) = b/(1-b) + g/(g-1), sign negative):
//     H_b(rho||sigma_BC) >= H_a(rho||sigma_C) - H_g(rho_BC||sigma_C)
enum class ChainKind { up, down, generalized };

InequalityRecord verify_chain_rule(const DensityMatrix& rho, ChainKind kind, RenyiOrder a,
                                   RenyiOrder b, RenyiOrder g,
                                   const DensityMatrix* sigma = nullptr,
                                   const VerifyOptions& opt = {});

// Measured-pair uncertainty bound, flipped relation and negative sign:
//   H_b(MX(rho_AB)||s_B) + H_g(MZ(rho_AB)||s_B) >= H_a(rho_AB||s_B) - log2 c
// sigma_b defaults to the B marginal.
InequalityRecord verify_measured_uncertainty(const DensityMatrix& rho_ab,
                                             const MeasurementPair& pair, RenyiOrder a,
                                             RenyiOrder b, RenyiOrder g,
                                             const Matrix* sigma_b = nullptr,
                                             const VerifyOptions& opt = {});

// Information exclusion bounds for the two measured registers:
//   general:     I^up_b(B;X) + I^up_g(B;Z) <= log2(d^2 c) - H^down_a(A|B)
//   min_entropy: orders (b, partner(b)) with the H^down_inf bound
//   hall_limit:  order-1 bound log2(d^2 c) (classical memory)
enum class ExclusionMode { general, min_entropy, hall_limit };

InequalityRecord verify_exclusion(const DensityMatrix& rho_ab, const MeasurementPair& pair,
                                  RenyiOrder a, RenyiOrder b, RenyiOrder g,
                                  ExclusionMode mode, const VerifyOptions& opt = {});

struct SanityBatteries {
  bool dpi = true;
  bool monotone = true;
  bool nonnegative = true;
  bool order_compare = true;  // H^up >= H^down, I^down <= I^up
  bool symmetry = true;       // I^down symmetric under swapping A and B
  bool duality = true;
  bool norm_forms = true;
  bool order_one = true;

  static SanityBatteries core() {
    SanityBatteries b;
    b.duality = b.norm_forms = b.order_one = false;
    return b;
  }
};

// Property batteries over random states; failures come back as records with
// negative margins, never as exceptions.
std::vector<InequalityRecord> sanity_suite(std::uint64_t seed, const std::vector<Shape>& dims,
                                           int trials, const SanityBatteries& batteries = {},
                                           const VerifyOptions& opt = {});

}  // namespace renyi
