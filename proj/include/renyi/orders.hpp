#pragma once

#include <optional>

#include "renyi/types.hpp"

namespace renyi {

// Extended positive real order (finite > 0, or +inf) with the derived
// exponents a' = (a-1)/a and a^ = a/(2a-1), so 1/a + 1/a^ = 2.
struct RenyiOrder {
  double value;

  explicit RenyiOrder(double v) : value(v) {
    if (std::isnan(v) || v <= 0.0)
      throw std::invalid_argument("RenyiOrder: order must be positive");
  }
  static RenyiOrder infinity() { return RenyiOrder(kInf); }

  bool is_one() const { return value == 1.0; }
  bool is_inf() const { return std::isinf(value); }

  // (a-1)/a; 1 at a = inf
  double prime() const { return is_inf() ? 1.0 : (value - 1.0) / value; }

  // a/(a-1); represented as +inf at a = 1 (the joint-limit convention)
  double inv_prime() const {
    if (is_one()) return kInf;
    if (is_inf()) return 1.0;
    return value / (value - 1.0);
  }

  // a/(2a-1); defined for a >= 1/2, with hat(1/2) = inf and hat(inf) = 1/2
  RenyiOrder hat() const {
    if (value < 0.5) throw std::invalid_argument("RenyiOrder::hat: needs order >= 1/2");
    if (value == 0.5) return RenyiOrder::infinity();
    if (is_inf()) return RenyiOrder(0.5);
    return RenyiOrder(value / (2.0 * value - 1.0));
  }
};

// inverse of inv_prime: the order with a/(a-1) = g (g = 1 gives +inf)
double order_from_inv_prime(double g);

enum class TripleCase {
  all_above_one,          // a in (1,2), b,g in (1,inf)
  all_below_one,          // a in [2/3,1), b,g in [1/2,1)
  gamma_below_one,        // a in (1,inf), b in (1,2), g in [1/2,1)
  alpha_gamma_below_one,  // a in (0,1), b in (1,inf), g in [1/2,1)
  invalid,
};

enum class SignProduct { positive, negative, zero };

// (a,b,g) with the relation 1/a' = 1/b' + 1/g', its residual, the range case
// (up to b <-> g symmetry) and the sign of (a-1)(b-1)(g-1).
struct OrderTriple {
  RenyiOrder alpha, beta, gamma;
  double relation_residual;
  TripleCase tag = TripleCase::invalid;
  SignProduct sign = SignProduct::zero;
  bool order_one_limit = false;  // all three orders equal 1
};

// Residual of 1/a' = 1/b' + 1/g' in extended arithmetic: the all-ones triple
// has residual 0 (joint limit); a triple where only some orders are 1 never
// satisfies the relation and gets residual +inf.
double relation_residual(RenyiOrder a, RenyiOrder b, RenyiOrder g);

// Residual of the flipped variant a/(a-1) = b/(1-b) + g/(g-1), i.e.
// 1/a' = -1/b' + 1/g' (the convention of the measured uncertainty bound).
double relation_residual_beta_flipped(RenyiOrder a, RenyiOrder b, RenyiOrder g);

// Range membership of the four cases ignoring the relation residual
// (canonicalized to beta >= gamma); used by the monotone-relaxed verifiers.
TripleCase triple_case_ranges(RenyiOrder a, RenyiOrder b, RenyiOrder g);

SignProduct sign_product(RenyiOrder a, RenyiOrder b, RenyiOrder g);

// Classification canonicalizes to beta >= gamma before matching the ranges.
OrderTriple classify_triple(RenyiOrder a, RenyiOrder b, RenyiOrder g,
                            double residual_tol = 1e-9);

// g with 1/g' = 1/a' - 1/b'; empty when the implied order is <= 0 or < 1/2.
std::optional<RenyiOrder> solve_third(RenyiOrder a, RenyiOrder b);

// (a,b,g,d) with 1/d' = 1/a' + 1/b' + 1/g' and all orders > 1/2.
struct OrderQuad {
  RenyiOrder alpha, beta, gamma, delta;
  double relation_residual;
  bool valid = false;
  bool order_one_limit = false;
};

OrderQuad make_quad(RenyiOrder a, RenyiOrder b, RenyiOrder g, RenyiOrder d,
                    double residual_tol = 1e-9);

// Gate for the exclusion relation: a > 2/3, b,g in [1/2, 4/3] (the upper
// boundary is attained only in the a -> inf limit), a/(a-1) <= 1/(b-1) +
// 1/(g-1), and (a-1)(b-1)(g-1) < 0. The all-ones triple passes as the
// order-1 limit.
bool exclusion_orders_feasible(RenyiOrder a, RenyiOrder b, RenyiOrder g);

// partner order (2a-3)/(a-2) of the min-entropy exclusion pairing, valid for
// a in [1/2, 4/3]
double min_entropy_partner(double alpha);

}  // namespace renyi
