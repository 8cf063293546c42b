#include "renyi/orders.hpp"

#include <cmath>

namespace renyi {

double order_from_inv_prime(double g) {
  if (g == 1.0) return kInf;
  if (std::isinf(g)) return 1.0;
  return g / (g - 1.0);
}

double relation_residual(RenyiOrder a, RenyiOrder b, RenyiOrder g) {
  int ones = int(a.is_one()) + int(b.is_one()) + int(g.is_one());
  if (ones == 3) return 0.0;
  if (ones > 0) return kInf;
  return a.inv_prime() - b.inv_prime() - g.inv_prime();
}

double relation_residual_beta_flipped(RenyiOrder a, RenyiOrder b, RenyiOrder g) {
  int ones = int(a.is_one()) + int(b.is_one()) + int(g.is_one());
  if (ones == 3) return 0.0;
  if (ones > 0) return kInf;
  return a.inv_prime() + b.inv_prime() - g.inv_prime();
}

SignProduct sign_product(RenyiOrder a, RenyiOrder b, RenyiOrder g) {
  if (a.is_one() || b.is_one() || g.is_one()) return SignProduct::zero;
  double s = (a.value > 1.0 ? 1.0 : -1.0) * (b.value > 1.0 ? 1.0 : -1.0) *
             (g.value > 1.0 ? 1.0 : -1.0);
  return s > 0.0 ? SignProduct::positive : SignProduct::negative;
}

namespace {

bool in_open(double v, double lo, double hi) { return v > lo && v < hi; }

TripleCase match_case(double a, double b, double g) {
  // b >= g assumed
  if (in_open(a, 1.0, 2.0) && b > 1.0 && g > 1.0) return TripleCase::all_above_one;
  if (a >= 2.0 / 3.0 && a < 1.0 && b >= 0.5 && b < 1.0 && g >= 0.5 && g < 1.0)
    return TripleCase::all_below_one;
  if (a > 1.0 && in_open(b, 1.0, 2.0) && g >= 0.5 && g < 1.0)
    return TripleCase::gamma_below_one;
  if (in_open(a, 0.0, 1.0) && b > 1.0 && g >= 0.5 && g < 1.0)
    return TripleCase::alpha_gamma_below_one;
  return TripleCase::invalid;
}

}  // namespace

TripleCase triple_case_ranges(RenyiOrder a, RenyiOrder b, RenyiOrder g) {
  double hi = std::max(b.value, g.value);
  double lo = std::min(b.value, g.value);
  return match_case(a.value, hi, lo);
}

OrderTriple classify_triple(RenyiOrder a, RenyiOrder b, RenyiOrder g, double residual_tol) {
  OrderTriple t{a, b, g, relation_residual(a, b, g)};
  t.sign = sign_product(a, b, g);
  t.order_one_limit = a.is_one() && b.is_one() && g.is_one();
  if (t.order_one_limit) return t;  // no case range contains 1; tag stays invalid
  if (!(std::abs(t.relation_residual) <= residual_tol)) return t;
  double hi = std::max(b.value, g.value);
  double lo = std::min(b.value, g.value);
  t.tag = match_case(a.value, hi, lo);
  return t;
}

std::optional<RenyiOrder> solve_third(RenyiOrder a, RenyiOrder b) {
  if (a.is_one() && b.is_one()) return RenyiOrder(1.0);
  if (a.is_one() || b.is_one()) return std::nullopt;  // joint limit only
  double g_ip = a.inv_prime() - b.inv_prime();
  double g = order_from_inv_prime(g_ip);
  if (std::isnan(g) || g <= 0.0) return std::nullopt;
  if (g < 0.5 - 1e-12) return std::nullopt;
  return RenyiOrder(g);
}

OrderQuad make_quad(RenyiOrder a, RenyiOrder b, RenyiOrder g, RenyiOrder d,
                    double residual_tol) {
  OrderQuad q{a, b, g, d, kInf};
  int ones = int(a.is_one()) + int(b.is_one()) + int(g.is_one()) + int(d.is_one());
  if (ones == 4) {
    q.relation_residual = 0.0;
    q.order_one_limit = true;
    q.valid = true;
    return q;
  }
  if (ones > 0) return q;
  q.relation_residual = d.inv_prime() - a.inv_prime() - b.inv_prime() - g.inv_prime();
  q.valid = std::abs(q.relation_residual) <= residual_tol &&
            a.value > 0.5 && b.value > 0.5 && g.value > 0.5 && d.value > 0.5;
  return q;
}

bool exclusion_orders_feasible(RenyiOrder a, RenyiOrder b, RenyiOrder g) {
  if (a.is_one() && b.is_one() && g.is_one()) return true;  // order-1 limit
  if (sign_product(a, b, g) != SignProduct::negative) return false;
  if (!(a.value > 2.0 / 3.0)) return false;
  if (!(b.value >= 0.5 && b.value <= 4.0 / 3.0 + 1e-12)) return false;
  if (!(g.value >= 0.5 && g.value <= 4.0 / 3.0 + 1e-12)) return false;
  double lhs = a.inv_prime();
  double rhs = 1.0 / (b.value - 1.0) + 1.0 / (g.value - 1.0);
  return lhs <= rhs + 1e-12;
}

double min_entropy_partner(double alpha) {
  if (alpha < 0.5 || alpha > 4.0 / 3.0 + 1e-12)
    throw std::invalid_argument("min_entropy_partner: order outside [1/2, 4/3]");
  return (2.0 * alpha - 3.0) / (alpha - 2.0);
}

}  // namespace renyi
