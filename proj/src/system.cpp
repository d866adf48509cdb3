#include "pellian/system.hpp"

#include <algorithm>
#include <cmath>

#include "pellian/bounds.hpp"
#include "pellian/errors.hpp"

namespace pellian {

namespace {

IntervalReal point_upper(const IntervalReal& v) {
  return IntervalReal::from_bounds(v.hi(), v.hi());
}

IntervalReal num(const mpz_class& v, mpfr_prec_t bits) {
  return IntervalReal::from_integer(v, bits);
}

// true / false when decided on the intervals, nullopt when they overlap.
std::optional<bool> decide_le(const IntervalReal& lhs, const IntervalReal& rhs) {
  if (certainly_less_equal(lhs, rhs)) return true;
  if (certainly_less(rhs, lhs)) return false;
  return std::nullopt;
}

bool exceeds(const QuadElement& a, const QuadElement& b) {
  return compare_across(a, b) == std::strong_ordering::greater;
}

// Largest of the candidates under compare_across; ties keep the first.
std::size_t argmax(const std::vector<QuadElement>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (exceeds(values[i], values[best])) best = i;
  }
  return best;
}

QuadElement W_exact(const SystemContext& ctx) {
  const std::vector<QuadElement> c{
      QuadElement::integer(ctx.a * ctx.b, ctx.a),
      ctx.eps.element * ctx.eps.element,
      ctx.eta.element * ctx.eta.element,
  };
  return c[argmax(c)];
}

}  // namespace

void require_pair(const mpz_class& a, const mpz_class& b) {
  if (a < 2 || b < 2) {
    throw InvalidInput("radicand_too_small", "a and b must be at least 2");
  }
  if (is_perfect_square(a)) throw InvalidInput("a_square", "a is a perfect square");
  if (is_perfect_square(b)) throw InvalidInput("b_square", "b is a perfect square");
  if (is_perfect_square(a * b)) {
    throw InvalidInput("ab_square", "ab = " + mpz_class(a * b).get_str() +
                                        " is a perfect square");
  }
}

SystemContext setup_system(const mpz_class& a, const mpz_class& b,
                           const mpz_class& u, const mpz_class& v,
                           mpfr_prec_t bits) {
  require_pair(a, b);
  if (u == 0) throw InvalidInput("u_zero", "u must be nonzero");
  if (v == 0) throw InvalidInput("v_zero", "v must be nonzero");

  Unit eps = totally_positive_unit(a, bits);
  Unit eta = totally_positive_unit(b, bits);
  mpz_class U = std::max({mpz_class(abs(u)), mpz_class(abs(v)), mpz_class(2)});

  const std::vector<QuadElement> cands{
      QuadElement::integer(U, a),
      QuadElement::integer(a * b, a),
      eps.element * eps.element,
      eta.element * eta.element,
  };
  static const char* const names[] = {"U", "ab", "eps^2", "eta^2"};
  const std::size_t k = argmax(cands);
  IntervalReal U0 = to_interval(cands[k], bits);
  IntervalReal log_U0 = U0.log();

  auto alpha_reps = class_representatives(a, u, eps);
  auto beta_reps = class_representatives(b, v, eta);
  SystemContext ctx{a,         b,    u,
                    v,         std::move(eps),
                    std::move(eta),
                    std::move(U),
                    cands[k],  names[k],
                    std::move(U0),
                    std::move(log_U0),
                    std::move(alpha_reps),
                    std::move(beta_reps)};
  check_context(ctx);
  return ctx;
}

void check_context(const SystemContext& ctx) {
  const QuadElement& U0 = ctx.U0_exact;
  const QuadElement eps2 = ctx.eps.element * ctx.eps.element;
  const QuadElement eta2 = ctx.eta.element * ctx.eta.element;
  for (const QuadElement& c : {QuadElement::integer(ctx.U, ctx.a),
                               QuadElement::integer(ctx.a * ctx.b, ctx.a), eps2, eta2}) {
    if (exceeds(c, U0)) throw InvariantViolation("U0_not_max", c.to_string());
  }
  if (!ctx.U0.contains(to_interval(U0, ctx.U0.bits() + 32))) {
    throw InvariantViolation("U0_interval", U0.to_string());
  }
  const QuadElement U0_sq = U0 * U0;
  const auto check = [&](const std::vector<PellClassRep>& reps, const mpz_class& N,
                         const QuadElement& unit2) {
    const QuadElement cap = mpz_class(abs(N)) * unit2;
    for (const PellClassRep& rep : reps) {
      check_class_rep(rep);
      if (compare(rep.alpha * rep.alpha, cap) == std::strong_ordering::greater) {
        throw InvariantViolation("rep_size", rep.alpha.to_string());
      }
    }
    if (exceeds(cap, U0_sq)) throw InvariantViolation("rep_bound_vs_U0", cap.to_string());
  };
  check(ctx.alpha_reps, ctx.u, eps2);
  check(ctx.beta_reps, ctx.v, eta2);
}

LinearFormValue lambda_value(const SystemContext& ctx, std::size_t alpha_index,
                             std::size_t beta_index, unsigned long m,
                             unsigned long n, PrecisionPolicy policy) {
  if (alpha_index >= ctx.alpha_reps.size() || beta_index >= ctx.beta_reps.size()) {
    throw InvalidInput("rep_index", "no representative pair (" +
                                        std::to_string(alpha_index) + ", " +
                                        std::to_string(beta_index) + ")");
  }
  const QuadElement A = ctx.alpha_reps[alpha_index].alpha * ctx.eps.element.pow(m);
  const QuadElement B = ctx.beta_reps[beta_index].alpha * ctx.eta.element.pow(n);
  if (A.x() == 0 && B.x() == 0 && A.y() == B.y()) {
    throw InvariantViolation("degenerate_linear_form", "Lambda vanishes identically");
  }
  const mpz_class dy = A.y() - B.y();
  const double target = std::ldexp(1.0, -static_cast<int>(policy.start / 2));

  for (mpfr_prec_t bits = policy.start; bits <= policy.ceiling; bits *= 2) {
    const IntervalReal ratio = sqrt_interval(ctx.a * ctx.b, bits) / num(ctx.a, bits);
    const IntervalReal den = to_interval(B, bits);
    const IntervalReal direct = (to_interval(A, bits) * ratio / den - mpz_class(1)).abs();
    const IntervalReal correction =
        mpz_class(2 * dy) * sqrt_interval(ctx.b, bits);
    const IntervalReal conjugate =
        ((to_interval(A.conj(), bits) * ratio - to_interval(B.conj(), bits) + correction) /
         den)
            .abs();
    if (!direct.excludes_zero() || !conjugate.excludes_zero() ||
        direct.relative_width() > target || conjugate.relative_width() > target) {
      continue;
    }
    if (!overlaps(direct, conjugate)) {
      throw InvariantViolation("lambda_forms_disagree",
                               "the two expressions of Lambda are disjoint");
    }
    LinearFormValue out{intersect(direct, conjugate), m, n, alpha_index, beta_index,
                        "both", direct, conjugate, dy == 0};
    return out;
  }
  throw PrecisionExhausted("lambda_separation",
                           "could not separate Lambda from 0 below the precision ceiling");
}

InequalityReport inequality_chain_check(const SystemContext& ctx,
                                        const LinearFormValue& lfv,
                                        PrecisionPolicy policy) {
  LinearFormValue cur = lfv;
  for (mpfr_prec_t bits = std::max(policy.start, lfv.lambda.bits());
       bits <= policy.ceiling; bits *= 2) {
    if (cur.lambda.bits() < bits) {
      cur = lambda_value(ctx, lfv.alpha_index, lfv.beta_index, lfv.m, lfv.n,
                         {bits, policy.ceiling});
    }
    const IntervalReal le = to_interval(ctx.eps.element, bits).log();
    const IntervalReal lh = to_interval(ctx.eta.element, bits).log();
    const IntervalReal L0 = to_interval(ctx.U0_exact, bits).log();
    const IntervalReal mt = mpz_class(cur.m) * le;
    const IntervalReal nt = mpz_class(cur.n) * lh;
    const IntervalReal M = max(mt, nt);
    const IntervalReal log_lambda = cur.lambda.log();

    const auto large = decide_le(mpz_class(12) * L0, M);
    const auto upper = decide_le(log_lambda, L0 * mpz_class(2) - nt);
    const auto balance = decide_le((mt - nt).abs(), mpz_class(4) * L0);
    if (!large || !upper || !balance) continue;
    InequalityReport r{log_lambda, M, *large, *upper, *balance, *large, false};
    if (*large) {
      const auto first = decide_le(log_lambda, mpz_class(6) * L0 - M);
      const auto second = decide_le(log_lambda, -M / num(2, bits));
      if (!first || !second) continue;
      r.lambda_decay = *first && *second;
    }
    return r;
  }
  throw PrecisionExhausted("inequality_undecided",
                           "an inequality stayed undecided at the precision ceiling");
}

std::string to_string(BoundRoute route) {
  return route == BoundRoute::linear_forms ? "linear-forms" : "bombieri";
}

BoundRoute parse_route(const std::string& name) {
  if (name == "linear-forms") return BoundRoute::linear_forms;
  if (name == "bombieri") return BoundRoute::bombieri;
  throw InvalidInput("unknown_route", "route must be linear-forms or bombieri, got " + name);
}

namespace {

// Checks that 3 log U0 dominates log A for A = alpha beta^-1 sqrt(b/a) over
// every representative pair.
void check_log_a3(const SystemContext& ctx, const IntervalReal& lA3, mpfr_prec_t bits) {
  const IntervalReal half_logs =
      (num(ctx.a, bits).log() + num(ctx.b, bits).log()) / num(2, bits);
  const IntervalReal half_diff =
      (num(ctx.b, bits).log() - num(ctx.a, bits).log()) / num(2, bits);
  for (const PellClassRep& ra : ctx.alpha_reps) {
    const IntervalReal ha = weil_height(ra.alpha, 1, bits);
    const IntervalReal la = to_interval(ra.alpha, bits).log();
    for (const PellClassRep& rb : ctx.beta_reps) {
      const IntervalReal height = ha + weil_height(rb.alpha, 1, bits) + half_logs;
      const IntervalReal abs_log = (la - to_interval(rb.alpha, bits).log() + half_diff).abs();
      if (!certainly_less_equal(certified_log_a(height, abs_log, 4), lA3)) {
        throw InvariantViolation("log_A3_exceeds",
                                 "log A for " + ra.alpha.to_string() + ", " +
                                     rb.alpha.to_string() + " exceeds 3 log U0");
      }
    }
  }
}

}  // namespace

EffectiveBoundReport effective_bound(const SystemContext& ctx, BoundRoute route,
                                     mpfr_prec_t bits) {
  const IntervalReal le = to_interval(ctx.eps.element, bits).log();
  const IntervalReal lh = to_interval(ctx.eta.element, bits).log();
  const IntervalReal L0 = to_interval(ctx.U0_exact, bits).log();
  const IntervalReal log_W = to_interval(W_exact(ctx), bits).log();
  const IntervalReal twelve = num(12, bits);
  const IntervalReal lA3 = point_upper(mpz_class(3) * L0);
  check_log_a3(ctx, lA3, bits);

  EffectiveBoundReport r;
  r.route = route;
  if (route == BoundRoute::linear_forms) {
    const IntervalReal lA1 = certified_log_a(le / num(2, bits), le, 4);
    const IntervalReal lA2 = certified_log_a(lh / num(2, bits), lh, 4);
    const IntervalReal K = num(linear_form_prefactor(3, 4), bits) * twelve.log();
    const IntervalReal c = max(lA1.inverse(), lA2.inverse());
    const IntervalReal three_min = mpz_class(3) * min(le, lh);
    const IntervalReal lead = mpz_class(6) * K * lA1 * lA2;
    const IntervalReal tail =
        mpz_class(2) * num(2, bits).log() / num(ctx.a * ctx.b, bits).log();
    // Upper bound on max{m log eps, n log eta} / log U0 at t, given t and
    // the linear form lower bound; only t <= G(t) is possible.
    const auto G = [&](const mpz_class& t) {
      return lead * max(twelve, c + num(t, bits) / three_min).log() + tail;
    };
    const auto beyond = [&](const mpz_class& t) {
      return mpfr_cmp_z(G(t).hi().get(), t.get_mpz_t()) < 0;
    };
    // G is concave, so once t > G(t) every larger t is excluded as well.
    // Iterating t -> G(t) + 1 from above stays beyond the fixed point.
    mpz_class hi;
    mpfr_get_z(hi.get_mpz_t(), lead.hi().get(), MPFR_RNDU);
    hi = std::max(mpz_class(hi << 20), mpz_class(12));
    while (!beyond(hi)) hi *= 2;
    for (;;) {
      mpz_class next;
      mpfr_get_z(next.get_mpz_t(), G(hi).hi().get(), MPFR_RNDU);
      next += 1;
      if (next >= hi || !beyond(next)) break;
      hi = next;
    }
    const IntervalReal T = max(num(hi, bits), twelve);
    r.bound_on_max_mn = T * L0;
    r.exponent = T + mpz_class(1);
    r.log_C = r.exponent * log_W;
    r.log_star_factor = log_star(max(le, lh));
    r.has_log_star_factor = true;
    r.absolute_constant = r.exponent / (le * lh * *r.log_star_factor);
    r.constants = {{"log_A1", lA1},         {"log_A2", lA2},
                   {"log_A3", lA3},         {"linear_form_constant", K},
                   {"fixed_point", num(hi, bits)},
                   {"exponent", r.exponent}, {"log_W", log_W},
                   {"absolute_constant", r.absolute_constant}};
  } else {
    const mpq_class kappa(2, 9);
    const BombieriInstance inst{4, kappa, {le / num(2, bits), lh / num(2, bits)}, lA3};
    const BombieriBound bb = bombieri_height_bound(inst);
    // max{m log eps, n log eta} = 2 h(eps^m eta^-n).
    r.bound_on_max_mn = max(mpz_class(2) * bb.bound, twelve * L0);
    r.exponent = max(mpz_class(60) * bb.Q, twelve) + mpz_class(1);
    r.log_C = r.exponent * log_W + mpz_class(20) * bb.Q * bb.Q;
    r.has_log_star_factor = false;
    r.absolute_constant = r.exponent / (le * lh);
    r.constants = {{"kappa", IntervalReal::from_rational(kappa, bits)},
                   {"C", bb.C},
                   {"Q", bb.Q},
                   {"height_bound", bb.bound},
                   {"exponent", r.exponent},
                   {"log_W", log_W},
                   {"absolute_constant", r.absolute_constant}};
  }
  r.direct_log_bound = L0 + r.bound_on_max_mn;
  r.X_log_bound = x_log_bound_at(r, ctx.U);
  if (certainly_less(r.X_log_bound, r.direct_log_bound)) {
    throw InvariantViolation("bound_forms", "direct bound exceeds the power-of-U form");
  }
  return r;
}

IntervalReal x_log_bound_at(const EffectiveBoundReport& report, const mpz_class& U) {
  return report.log_C + report.exponent * num(U, report.exponent.bits()).log();
}

void check_route_structure(const EffectiveBoundReport& linear_forms,
                           const EffectiveBoundReport& bombieri) {
  if (linear_forms.route != BoundRoute::linear_forms || bombieri.route != BoundRoute::bombieri) {
    throw InvalidInput("route_order", "expected (linear-forms, bombieri) reports");
  }
  if (!linear_forms.has_log_star_factor || !linear_forms.log_star_factor) {
    throw InvariantViolation("missing_log_star", "linear-forms record lacks log*");
  }
  if (bombieri.has_log_star_factor || bombieri.log_star_factor) {
    throw InvariantViolation("unexpected_log_star", "bombieri record carries log*");
  }
}

std::vector<SystemSolution> positive_solutions(const SystemContext& ctx,
                                               const mpz_class& y_cap) {
  if (y_cap < 1) throw InvalidInput("cap_too_small", "y_cap must be at least 1");
  const auto sa = solve_pell_capped(ctx.a, ctx.u, y_cap);
  const auto sb = solve_pell_capped(ctx.b, ctx.v, y_cap);

  std::vector<SystemSolution> out;
  auto i = sa.begin();
  auto j = sb.begin();
  while (i != sa.end() && j != sb.end()) {
    if (i->y < j->y) {
      ++i;
    } else if (j->y < i->y) {
      ++j;
    } else {
      if (sgn(i->y) > 0 && sgn(i->x) > 0 && sgn(j->x) > 0) {
        out.push_back({i->x, i->y, j->x});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

SolutionSet solve_system(const SystemContext& ctx, const mpz_class& y_cap) {
  SolutionSet out;
  out.solutions = positive_solutions(ctx, y_cap);
  out.y_cap = y_cap;

  const EffectiveBoundReport lf = effective_bound(ctx, BoundRoute::linear_forms);
  const EffectiveBoundReport bo = effective_bound(ctx, BoundRoute::bombieri);
  const bool lf_smaller = compare(lf.direct_log_bound.hi(), bo.direct_log_bound.hi()) <= 0;
  const EffectiveBoundReport& best = lf_smaller ? lf : bo;
  out.bound_route = best.route;
  const mpfr_prec_t bits = best.direct_log_bound.bits();
  out.log10_bound = best.direct_log_bound / num(10, bits).log();
  out.certified_complete =
      certainly_less_equal(best.direct_log_bound, num(y_cap, bits).log());
  return out;
}

SolutionExponents solution_exponents(const SystemContext& ctx, const SystemSolution& s) {
  const auto da = decompose(make_element(s.x, s.y, ctx.a), ctx.alpha_reps);
  const auto db = decompose(make_element(s.z, s.y, ctx.b), ctx.beta_reps);
  if (da.size() != 1 || db.size() != 1) {
    throw InvariantViolation("decomposition", "solution does not decompose uniquely");
  }
  return {da[0].class_index, da[0].power, db[0].class_index, db[0].power};
}

}  // namespace pellian
