#include "renyi/relations.hpp"

#include <cmath>

namespace renyi {

namespace {

constexpr double kResidualTol = 1e-9;

struct TermValue {
  Bits bits = 0.0;
  bool converged = true;
};

// optimizer-backed terms keep the last iterate's value on failure so that the
// record can still be emitted with converged = false
template <typename F>
TermValue eval_term(F&& f) {
  try {
    return {f(), true};
  } catch (const ConvergenceError& e) {
    return {e.last_iterate().value, false};
  }
}

VerifyOptions refined_options(const VerifyOptions& opt) {
  VerifyOptions r = opt;
  r.violation_recheck = false;
  r.budget.tol *= 1e-2;
  r.budget.restarts += 2;
  r.budget.max_iters *= 2;
  r.budget.oracle_polish = true;
  return r;
}

void fill_dims(InequalityRecord& rec, const DensityMatrix& rho) {
  rec.dim_a = static_cast<int>(rho.shape[0]);
  rec.dim_b = static_cast<int>(rho.shape.rank() > 1 ? rho.shape[1] : 1);
}

// flag failed margins, re-running the computation at tighter precision first
template <typename Recompute>
InequalityRecord finalize(InequalityRecord rec, const VerifyOptions& opt, bool has_optimizer,
                          Recompute&& recompute) {
  if (rec.margin_bits < -opt.tolerance_bits && has_optimizer && opt.violation_recheck)
    rec = recompute(refined_options(opt));
  rec.counterexample_candidate = rec.margin_bits < -opt.tolerance_bits;
  return rec;
}

void require_sign(SignProduct sign, bool lower_form, bool order_one_limit) {
  if (order_one_limit) return;
  SignProduct needed = lower_form ? SignProduct::positive : SignProduct::negative;
  if (sign != needed)
    throw std::invalid_argument("verify: inequality direction does not match the order signs");
}

InequalityRecord decomposition_record(const DensityMatrix& rho_ab, RenyiOrder a, RenyiOrder b,
                                      RenyiOrder g, DecompForm form, bool swap_ab,
                                      const VerifyOptions& opt, bool relaxed) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("verify_decomposition: state must be bipartite");
  const bool up_form = form == DecompForm::up_lower || form == DecompForm::up_upper;
  const bool lower = form == DecompForm::up_lower || form == DecompForm::down_lower;
  if (swap_ab && up_form)
    throw std::invalid_argument("verify_decomposition: swap only applies to the I-down forms");

  const bool limit = a.is_one() && b.is_one() && g.is_one();
  if (relaxed) {
    double residual = relation_residual(a, b, g);
    if (!limit) {
      if (lower && !(residual >= -kResidualTol))
        throw std::invalid_argument("verify_decomposition: relaxed relation direction mismatch");
      if (!lower && !(residual <= kResidualTol))
        throw std::invalid_argument("verify_decomposition: relaxed relation direction mismatch");
      if (triple_case_ranges(a, b, g) == TripleCase::invalid)
        throw std::invalid_argument("verify_decomposition: orders outside the valid ranges");
    }
    require_sign(sign_product(a, b, g), lower, limit);
  } else {
    OrderTriple triple = classify_triple(a, b, g, kResidualTol);
    if (!triple.order_one_limit && triple.tag == TripleCase::invalid)
      throw std::invalid_argument("verify_decomposition: orders do not satisfy the relation");
    require_sign(triple.sign, lower, triple.order_one_limit);
  }

  TermValue lhs = eval_term([&] {
    return mutual_info(rho_ab, g, up_form ? MutualVariant::up : MutualVariant::down,
                       opt.budget);
  });
  // unswapped: H_b(B) - H_a(B|A); swapped: H_b(A) - H_a(A|B)
  DensityMatrix cond_state = swap_ab ? rho_ab : rho_ab.swapped();
  Bits hb = renyi_entropy(rho_ab.marginal({swap_ab ? 0 : 1}), b);
  TermValue hcond = eval_term([&] {
    return cond_entropy(cond_state, a, up_form ? CondVariant::down : CondVariant::up,
                        opt.budget);
  });

  InequalityRecord rec;
  rec.name = std::string(up_form ? "mi_up" : "mi_down") + (lower ? "_lower" : "_upper") +
             (relaxed ? "_relaxed" : "") + (swap_ab ? "_swap" : "");
  rec.alpha = a.value;
  rec.beta = b.value;
  rec.gamma = g.value;
  fill_dims(rec, rho_ab);
  rec.lhs_bits = lhs.bits;
  rec.rhs_bits = hb - hcond.bits;
  rec.margin_bits = lower ? rec.lhs_bits - rec.rhs_bits : rec.rhs_bits - rec.lhs_bits;
  rec.converged = lhs.converged && hcond.converged;
  // only the up_upper form has every optimizer term on the strict side
  rec.soundness = (form == DecompForm::up_upper) ? InequalityRecord::Side::certified
                                                 : InequalityRecord::Side::heuristic;
  return rec;
}

}  // namespace

InequalityRecord verify_decomposition(const DensityMatrix& rho_ab, RenyiOrder a, RenyiOrder b,
                                      RenyiOrder g, DecompForm form, bool swap_ab,
                                      const VerifyOptions& opt) {
  InequalityRecord rec = decomposition_record(rho_ab, a, b, g, form, swap_ab, opt, false);
  return finalize(rec, opt, true, [&](const VerifyOptions& refined) {
    return decomposition_record(rho_ab, a, b, g, form, swap_ab, refined, false);
  });
}

InequalityRecord verify_decomposition_relaxed(const DensityMatrix& rho_ab, RenyiOrder a,
                                              RenyiOrder b, RenyiOrder g, DecompForm form,
                                              bool swap_ab, const VerifyOptions& opt) {
  InequalityRecord rec = decomposition_record(rho_ab, a, b, g, form, swap_ab, opt, true);
  return finalize(rec, opt, true, [&](const VerifyOptions& refined) {
    return decomposition_record(rho_ab, a, b, g, form, swap_ab, refined, true);
  });
}

namespace {

InequalityRecord joint_record(const DensityMatrix& rho_ab, const OrderQuad& quad,
                              JointDirection dir, const VerifyOptions& opt) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("verify_joint_decomposition: state must be bipartite");
  if (!quad.valid)
    throw std::invalid_argument("verify_joint_decomposition: quad does not satisfy the relation");
  const double d = quad.delta.value;
  if (!quad.order_one_limit) {
    bool ordered = dir == JointDirection::lower
                       ? (d < quad.alpha.value && d < quad.beta.value && d < quad.gamma.value)
                       : (d > quad.alpha.value && d > quad.beta.value && d > quad.gamma.value);
    if (!ordered)
      throw std::invalid_argument("verify_joint_decomposition: delta ordering mismatch");
  }

  TermValue lhs = eval_term([&] {
    return mutual_info(rho_ab, quad.gamma,
                       dir == JointDirection::lower ? MutualVariant::down : MutualVariant::up,
                       opt.budget);
  });
  Bits rhs = renyi_entropy(rho_ab.marginal({0}), quad.alpha) +
             renyi_entropy(rho_ab.marginal({1}), quad.beta) -
             renyi_entropy(rho_ab, quad.delta);

  InequalityRecord rec;
  rec.name = dir == JointDirection::lower ? "joint_lower" : "joint_upper";
  rec.alpha = quad.alpha.value;
  rec.beta = quad.beta.value;
  rec.gamma = quad.gamma.value;
  rec.delta = quad.delta.value;
  fill_dims(rec, rho_ab);
  rec.lhs_bits = lhs.bits;
  rec.rhs_bits = rhs;
  rec.margin_bits =
      dir == JointDirection::lower ? lhs.bits - rhs : rhs - lhs.bits;
  rec.converged = lhs.converged;
  rec.soundness = dir == JointDirection::upper ? InequalityRecord::Side::certified
                                               : InequalityRecord::Side::heuristic;
  return rec;
}

}  // namespace

InequalityRecord verify_joint_decomposition(const DensityMatrix& rho_ab, const OrderQuad& quad,
                                            JointDirection dir, const VerifyOptions& opt) {
  InequalityRecord rec = joint_record(rho_ab, quad, dir, opt);
  return finalize(rec, opt, true, [&](const VerifyOptions& refined) {
    return joint_record(rho_ab, quad, dir, refined);
  });
}

namespace {

InequalityRecord chain_record(const DensityMatrix& rho, ChainKind kind, RenyiOrder a,
                              RenyiOrder b, RenyiOrder g, const DensityMatrix* sigma,
                              const VerifyOptions& opt) {
  InequalityRecord rec;
  rec.alpha = a.value;
  rec.beta = b.value;
  rec.gamma = g.value;
  const bool limit = a.is_one() && b.is_one() && g.is_one();

  if (kind == ChainKind::generalized) {
    if (rho.shape.rank() != 3 || sigma == nullptr || sigma->shape.rank() != 3)
      throw std::invalid_argument("verify_chain_rule: generalized form needs tripartite rho and sigma");
    if (!limit) {
      if (std::abs(relation_residual_beta_flipped(a, b, g)) > kResidualTol)
        throw std::invalid_argument("verify_chain_rule: flipped relation residual too large");
      if (sign_product(a, b, g) != SignProduct::negative)
        throw std::invalid_argument("verify_chain_rule: generalized form needs negative sign");
      if (a.value < 0.5 || b.value < 0.5 || g.value < 0.5)
        throw std::invalid_argument("verify_chain_rule: orders must be >= 1/2");
    }
    Matrix sigma_c = sigma->marginal({2}).mat;
    Matrix sigma_bc = sigma->marginal({1, 2}).mat;
    Bits lhs = cond_entropy_given(rho.as_bipartite(1), sigma_bc, b);
    Bits rhs = cond_entropy_given(rho.as_bipartite(2), sigma_c, a) -
               cond_entropy_given(rho.marginal({1, 2}), sigma_c, g);
    rec.name = "chain_generalized";
    fill_dims(rec, rho);
    rec.lhs_bits = lhs;
    rec.rhs_bits = rhs;
    rec.margin_bits = lhs - rhs;
    rec.soundness = InequalityRecord::Side::certified;
    return rec;
  }

  if (rho.shape.rank() != 2)
    throw std::invalid_argument("verify_chain_rule: state must be bipartite");
  OrderTriple triple = classify_triple(a, b, g, kResidualTol);
  if (!triple.order_one_limit && triple.tag == TripleCase::invalid)
    throw std::invalid_argument("verify_chain_rule: orders do not satisfy the relation");
  require_sign(triple.sign, kind == ChainKind::up, triple.order_one_limit);

  fill_dims(rec, rho);
  if (kind == ChainKind::up) {
    // H^up_b(A|B) <= H_a(AB) - H_g(B)
    TermValue h_up = eval_term([&] { return cond_entropy(rho, b, CondVariant::up, opt.budget); });
    Bits rhs = renyi_entropy(rho, a) - renyi_entropy(rho.marginal({1}), g);
    rec.name = "chain_up";
    rec.lhs_bits = h_up.bits;
    rec.rhs_bits = rhs;
    rec.margin_bits = rhs - h_up.bits;
    rec.converged = h_up.converged;
    rec.soundness = InequalityRecord::Side::heuristic;
  } else {
    // H^down_b(B|A) >= H_a(AB) - H_g(A)
    Bits h_down = cond_entropy(rho.swapped(), b, CondVariant::down);
    Bits rhs = renyi_entropy(rho, a) - renyi_entropy(rho.marginal({0}), g);
    rec.name = "chain_down";
    rec.lhs_bits = h_down;
    rec.rhs_bits = rhs;
    rec.margin_bits = h_down - rhs;
    rec.soundness = InequalityRecord::Side::certified;
  }
  return rec;
}

}  // namespace

InequalityRecord verify_chain_rule(const DensityMatrix& rho, ChainKind kind, RenyiOrder a,
                                   RenyiOrder b, RenyiOrder g, const DensityMatrix* sigma,
                                   const VerifyOptions& opt) {
  InequalityRecord rec = chain_record(rho, kind, a, b, g, sigma, opt);
  return finalize(rec, opt, kind == ChainKind::up, [&](const VerifyOptions& refined) {
    return chain_record(rho, kind, a, b, g, sigma, refined);
  });
}

InequalityRecord verify_measured_uncertainty(const DensityMatrix& rho_ab,
                                             const MeasurementPair& pair, RenyiOrder a,
                                             RenyiOrder b, RenyiOrder g, const Matrix* sigma_b,
                                             const VerifyOptions& opt) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("verify_measured_uncertainty: state must be bipartite");
  const bool limit = a.is_one() && b.is_one() && g.is_one();
  if (!limit) {
    if (std::abs(relation_residual_beta_flipped(a, b, g)) > kResidualTol)
      throw std::invalid_argument("verify_measured_uncertainty: relation residual too large");
    if (sign_product(a, b, g) != SignProduct::negative)
      throw std::invalid_argument("verify_measured_uncertainty: needs negative sign product");
    if (a.value < 0.5 || b.value < 0.5 || g.value < 0.5)
      throw std::invalid_argument("verify_measured_uncertainty: orders must be >= 1/2");
  }

  Matrix sb = sigma_b ? *sigma_b : rho_ab.marginal({1}).mat;
  DensityMatrix mx = pinch_measure(rho_ab, pair.basis_x);
  DensityMatrix mz = pinch_measure(rho_ab, pair.basis_z);

  InequalityRecord rec;
  rec.name = "mu_uncertainty";
  rec.alpha = a.value;
  rec.beta = b.value;
  rec.gamma = g.value;
  fill_dims(rec, rho_ab);
  rec.lhs_bits = cond_entropy_given(mx, sb, b) + cond_entropy_given(mz, sb, g);
  rec.rhs_bits = cond_entropy_given(rho_ab, sb, a) - std::log2(pair.overlap);
  rec.margin_bits = rec.lhs_bits - rec.rhs_bits;
  rec.soundness = InequalityRecord::Side::certified;
  rec.counterexample_candidate = rec.margin_bits < -opt.tolerance_bits;
  return rec;
}

namespace {

InequalityRecord exclusion_record(const DensityMatrix& rho_ab, const MeasurementPair& pair,
                                  RenyiOrder a, RenyiOrder b, RenyiOrder g, ExclusionMode mode,
                                  const VerifyOptions& opt) {
  if (rho_ab.shape.rank() != 2)
    throw std::invalid_argument("verify_exclusion: state must be bipartite");
  const Eigen::Index d = rho_ab.shape[0];
  if (pair.basis_x.rows() != d)
    throw std::invalid_argument("verify_exclusion: basis dimension mismatch");

  RenyiOrder order_x = b, order_z = g, order_h = a;
  if (mode == ExclusionMode::min_entropy) {
    order_x = b;
    order_z = RenyiOrder(min_entropy_partner(b.value));
    order_h = RenyiOrder::infinity();
  } else if (mode == ExclusionMode::hall_limit) {
    order_x = order_z = order_h = RenyiOrder(1.0);
  } else {
    if (!exclusion_orders_feasible(a, b, g))
      throw std::invalid_argument("verify_exclusion: orders are not feasible");
  }

  DensityMatrix mx = pinch_measure(rho_ab, pair.basis_x).swapped();  // (B, X)
  DensityMatrix mz = pinch_measure(rho_ab, pair.basis_z).swapped();  // (B, Z)

  TermValue ix = eval_term([&] { return mutual_info(mx, order_x, MutualVariant::up, opt.budget); });
  TermValue iz = eval_term([&] { return mutual_info(mz, order_z, MutualVariant::up, opt.budget); });

  Bits bound = std::log2(double(d) * double(d) * pair.overlap);
  if (mode != ExclusionMode::hall_limit)
    bound -= cond_entropy(rho_ab, order_h, CondVariant::down);

  InequalityRecord rec;
  rec.name = mode == ExclusionMode::general ? "exclusion"
             : mode == ExclusionMode::min_entropy ? "exclusion_minent"
                                                  : "hall_limit";
  rec.alpha = order_h.value;
  rec.beta = order_x.value;
  rec.gamma = order_z.value;
  fill_dims(rec, rho_ab);
  rec.lhs_bits = ix.bits + iz.bits;
  rec.rhs_bits = bound;
  rec.margin_bits = bound - rec.lhs_bits;
  rec.converged = ix.converged && iz.converged;
  rec.soundness = InequalityRecord::Side::certified;
  return rec;
}

}  // namespace

InequalityRecord verify_exclusion(const DensityMatrix& rho_ab, const MeasurementPair& pair,
                                  RenyiOrder a, RenyiOrder b, RenyiOrder g, ExclusionMode mode,
                                  const VerifyOptions& opt) {
  InequalityRecord rec = exclusion_record(rho_ab, pair, a, b, g, mode, opt);
  return finalize(rec, opt, true, [&](const VerifyOptions& refined) {
    return exclusion_record(rho_ab, pair, a, b, g, mode, refined);
  });
}

namespace {

InequalityRecord tolerance_record(const char* name, Bits deviation, Bits allowed) {
  InequalityRecord rec;
  rec.name = name;
  rec.lhs_bits = deviation;
  rec.rhs_bits = allowed;
  rec.margin_bits = allowed - deviation;
  return rec;
}

}  // namespace

std::vector<InequalityRecord> sanity_suite(std::uint64_t seed, const std::vector<Shape>& dims,
                                           int trials, const SanityBatteries& batteries,
                                           const VerifyOptions& opt) {
  if (dims.empty()) throw std::invalid_argument("sanity_suite: no shapes given");
  static const double kGrid[] = {0.6, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, kInf};
  static const StateKind kKinds[] = {StateKind::hs_mixed, StateKind::haar_pure,
                                     StateKind::product, StateKind::classical_quantum};

  std::vector<InequalityRecord> out;
  for (int t = 0; t < trials; ++t) {
    const Shape& shape = dims[static_cast<size_t>(t) % dims.size()];
    if (shape.rank() != 2)
      throw std::invalid_argument("sanity_suite: shapes must be bipartite");
    std::uint64_t st = Rng::derive(seed, static_cast<std::uint64_t>(t));
    StateKind kind = (t % 10 == 9 && shape[0] == shape[1])
                         ? StateKind::max_entangled
                         : kKinds[static_cast<size_t>(t) % 4];
    DensityMatrix rho = random_state(kind, shape, st);
    RenyiOrder alpha(kGrid[static_cast<size_t>(t) % 8]);
    OptBudget bud = opt.budget;
    bud.seed = Rng::derive(st, 0xb0);

    auto push = [&](InequalityRecord rec, RenyiOrder order,
                    InequalityRecord::Side side = InequalityRecord::Side::certified,
                    bool converged = true) {
      rec.alpha = order.value;
      fill_dims(rec, rho);
      rec.state_seed = st;
      rec.trial = t;
      rec.soundness = side;
      rec.converged = converged;
      rec.counterexample_candidate = rec.margin_bits < -opt.tolerance_bits;
      out.push_back(std::move(rec));
    };

    if (batteries.dpi || batteries.monotone || batteries.nonnegative) {
      DensityMatrix sigma = random_state(StateKind::hs_mixed, shape, Rng::derive(st, 0xa1));
      if (batteries.dpi) {
        Bits full = renyi_divergence(rho, sigma.mat, alpha);
        Bits traced = renyi_divergence(rho.marginal({1}), sigma.marginal({1}).mat, alpha);
        InequalityRecord rec = tolerance_record("dpi_ptrace", 0, 0);
        rec.lhs_bits = full;
        rec.rhs_bits = traced;
        rec.margin_bits = full - traced;
        push(rec, alpha);

        Rng basis_rng(Rng::derive(st, 0xa2));
        Matrix basis = random_basis(shape[0], basis_rng);
        Bits pinched = renyi_divergence(pinch_measure(rho, basis),
                                        pinch_measure(sigma, basis).mat, alpha);
        InequalityRecord rec2 = tolerance_record("dpi_pinch", 0, 0);
        rec2.lhs_bits = full;
        rec2.rhs_bits = pinched;
        rec2.margin_bits = full - pinched;
        push(rec2, alpha);
      }
      if (batteries.monotone) {
        double worst = kInf;
        Bits prev = -kInf, worst_lo = 0, worst_hi = 0;
        for (double av : kGrid) {
          Bits cur = renyi_divergence(rho, sigma.mat, RenyiOrder(av));
          if (std::isfinite(prev)) {
            double step = cur - prev;
            if (step < worst) {
              worst = step;
              worst_lo = prev;
              worst_hi = cur;
            }
          }
          prev = cur;
        }
        InequalityRecord rec = tolerance_record("alpha_monotone", 0, 0);
        rec.lhs_bits = worst_hi;
        rec.rhs_bits = worst_lo;
        rec.margin_bits = worst;
        push(rec, alpha);
      }
      if (batteries.nonnegative) {
        Bits dv = renyi_divergence(rho, sigma.mat, alpha);
        InequalityRecord rec = tolerance_record("nonnegativity", 0, 0);
        rec.lhs_bits = dv;
        rec.rhs_bits = 0.0;
        rec.margin_bits = dv;
        push(rec, alpha);
      }
    }

    if (batteries.order_compare) {
      Bits h_down = cond_entropy(rho, alpha, CondVariant::down);
      TermValue h_up = eval_term([&] { return cond_entropy(rho, alpha, CondVariant::up, bud); });
      InequalityRecord rec = tolerance_record("cond_order", 0, 0);
      rec.lhs_bits = h_up.bits;
      rec.rhs_bits = h_down;
      rec.margin_bits = h_up.bits - h_down;
      push(rec, alpha, InequalityRecord::Side::certified, h_up.converged);

      TermValue i_up = eval_term([&] { return mutual_info(rho, alpha, MutualVariant::up, bud); });
      TermValue i_down =
          eval_term([&] { return mutual_info(rho, alpha, MutualVariant::down, bud); });
      InequalityRecord rec2 = tolerance_record("mi_order", 0, 0);
      rec2.lhs_bits = i_up.bits;
      rec2.rhs_bits = i_down.bits;
      rec2.margin_bits = i_up.bits - i_down.bits + 1e-7;
      push(rec2, alpha, InequalityRecord::Side::heuristic,
           i_up.converged && i_down.converged);

      if (batteries.symmetry) {
        TermValue i_swapped = eval_term(
            [&] { return mutual_info(rho.swapped(), alpha, MutualVariant::down, bud); });
        push(tolerance_record("mi_symmetry", std::abs(i_down.bits - i_swapped.bits), 1e-6),
             alpha, InequalityRecord::Side::heuristic,
             i_down.converged && i_swapped.converged);
      }
    }

    if (batteries.duality && alpha.value >= 0.5) {
      DensityMatrix pure3 = purify(rho);
      DensityMatrix tau_a = rho.marginal({0});
      TermValue gap = eval_term([&] { return duality_gap(pure3, tau_a, alpha, bud); });
      push(tolerance_record("duality", std::abs(gap.bits), 1e-4), alpha,
           InequalityRecord::Side::heuristic, gap.converged);
    }

    if (batteries.norm_forms) {
      RenyiOrder a_nf = alpha.is_one() ? RenyiOrder(2.0) : alpha;
      Bits re = norm_form_value(rho, a_nf, NormFormKind::entropy);
      Bits re_ref = renyi_entropy(rho.marginal({1}), a_nf);
      push(tolerance_record("normform_re", std::abs(re - re_ref), 1e-5), a_nf);

      Matrix sa = rho.marginal({0}).mat;
      TermValue cre = eval_term(
          [&] { return norm_form_value(rho, a_nf, NormFormKind::conditional, &sa, bud); });
      Bits cre_ref = -renyi_divergence(
          rho, tensor_product(sa, Matrix::Identity(shape[1], shape[1])), a_nf);
      push(tolerance_record("normform_cre", std::abs(cre.bits - cre_ref), 1e-5), a_nf,
           InequalityRecord::Side::heuristic, cre.converged);

      if (a_nf.value >= 0.5) {
        TermValue mi_nf = eval_term(
            [&] { return norm_form_value(rho, a_nf, NormFormKind::mutual, &sa, bud); });
        TermValue mi_ref =
            eval_term([&] { return mutual_info_given(rho, sa, a_nf, bud); });
        push(tolerance_record("normform_mi", std::abs(mi_nf.bits - mi_ref.bits), 1e-5), a_nf,
             InequalityRecord::Side::heuristic, mi_nf.converged && mi_ref.converged);
      }
    }

    if (batteries.order_one) {
      RenyiOrder one(1.0);
      TermValue i1 = eval_term([&] { return mutual_info(rho, one, MutualVariant::up, bud); });
      Bits ha = renyi_entropy(rho.marginal({0}), one);
      Bits hb = renyi_entropy(rho.marginal({1}), one);
      Bits hab = renyi_entropy(rho, one);
      Bits h_cond = cond_entropy(rho, one, CondVariant::down);
      push(tolerance_record("order1_cond_decomp", std::abs(i1.bits - (ha - h_cond)), 1e-6),
           one, InequalityRecord::Side::heuristic, i1.converged);
      push(tolerance_record("order1_joint_decomp", std::abs(i1.bits - (ha + hb - hab)), 1e-6),
           one, InequalityRecord::Side::heuristic, i1.converged);
    }
  }
  return out;
}

}  // namespace renyi
