#include "pellian/approx.hpp"

#include <algorithm>
#include <regex>

#include "pellian/bounds.hpp"
#include "pellian/errors.hpp"

namespace pellian {

mpq_class parse_decimal(const std::string& text) {
  static const std::regex fraction(R"(([+-]?\d+)/(\d+))");
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    const mpz_class den(m[2].str(), 10);
    if (den == 0) throw InvalidInput("bad_number", "zero denominator in " + text);
    mpq_class out(mpz_class(m[1].str(), 10), den);
    out.canonicalize();
    return out;
  }
  if (!std::regex_match(text, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
    throw InvalidInput("bad_number", "not a decimal number: " + text);
  }
  const std::string digits = m[2].str() + m[3].str();
  mpq_class out(mpz_class(digits, 10));
  long exponent = -static_cast<long>(m[3].length());
  if (m[4].matched) {
    if (m[4].length() > 9) throw InvalidInput("bad_number", "exponent too large: " + text);
    exponent += std::stol(m[4].str());
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    out *= scale;
  } else {
    out /= scale;
  }
  out.canonicalize();
  if (m[1] == "-") out = -out;
  return out;
}

QuadElement Distance::value() const {
  if (above) return QuadElement::trusted(f + 1, -q, a);
  return QuadElement::trusted(-f, q, a);
}

IntervalReal Distance::interval(mpfr_prec_t bits) const {
  return to_interval(value(), bits);
}

Distance dist_nearest(const mpz_class& q, const mpz_class& a) {
  if (q < 1) throw InvalidInput("q_not_positive", "q must be at least 1");
  require_radicand(a);
  const mpz_class aq2 = a * q * q;
  mpz_class f = isqrt(aq2);
  const mpz_class twice = 2 * f + 1;
  const bool above = 4 * aq2 > twice * twice;
  return {q, a, std::move(f), above};
}

std::strong_ordering compare(const Distance& x, const Distance& y) {
  const IntervalReal ix = x.interval(64), iy = y.interval(64);
  if (certainly_less(ix, iy)) return std::strong_ordering::less;
  if (certainly_less(iy, ix)) return std::strong_ordering::greater;
  return compare_across(x.value(), y.value());
}

std::strong_ordering compare(const Distance& x, const mpq_class& c) {
  return compare(c.get_den() * x.value(), QuadElement::integer(c.get_num(), x.a));
}

namespace {

const Distance& larger(const Distance& x, const Distance& y) {
  return compare(x, y) == std::strong_ordering::less ? y : x;
}

}  // namespace

ApproxRecord make_record(const mpz_class& q, const mpz_class& a, const mpz_class& b,
                         mpfr_prec_t bits) {
  Distance da = dist_nearest(q, a);
  Distance db = dist_nearest(q, b);
  IntervalReal max_dist = larger(da, db).interval(bits);
  std::optional<IntervalReal> local;
  if (q > 1) local = -max_dist.log() / IntervalReal::from_integer(q, bits).log();
  return {q, std::move(da), std::move(db), std::move(max_dist), std::move(local)};
}

VerifyResult verify_inequality(const mpz_class& a, const mpz_class& b,
                               const mpq_class& c, const mpq_class& mu,
                               const mpz_class& q_max, std::size_t keep) {
  require_pair(a, b);
  if (sgn(c) <= 0) throw InvalidInput("c_not_positive", "c must be positive");
  if (mu <= 1) throw InvalidInput("mu_too_small", "mu must exceed 1");
  if (q_max < 1) throw InvalidInput("cap_too_small", "q_max must be at least 1");

  constexpr mpfr_prec_t bits = 64;
  mpq_class e = mu - 1;
  e.canonicalize();
  const mpz_class& r = e.get_num();
  const unsigned long s = e.get_den().get_ui();
  const IntervalReal c_iv = IntervalReal::from_rational(c, bits);
  const IntervalReal e_iv = IntervalReal::from_rational(e, bits);
  mpz_class cs_num, cs_den;
  mpz_pow_ui(cs_num.get_mpz_t(), c.get_num_mpz_t(), s);
  mpz_pow_ui(cs_den.get_mpz_t(), c.get_den_mpz_t(), s);

  VerifyResult out;
  out.q_max = q_max;
  struct Candidate {
    double ratio;
    mpz_class q;
  };
  std::vector<Candidate> worst;
  for (mpz_class q = 1; q <= q_max; ++q) {
    const Distance da = dist_nearest(q, a);
    const Distance db = dist_nearest(q, b);
    const Distance& d = larger(da, db);
    const IntervalReal scale = (e_iv * IntervalReal::from_integer(q, bits).log()).exp();
    const IntervalReal ratio = d.interval(bits) * scale;
    bool holds;
    if (certainly_less(c_iv, ratio)) {
      holds = true;
    } else if (certainly_less(ratio, c_iv)) {
      holds = false;
    } else {
      ++out.exact_fallbacks;
      mpz_class qr;
      mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), r.get_ui());
      const QuadElement lhs = mpz_class(cs_den * qr) * d.value().pow(s);
      holds = compare(lhs, QuadElement::integer(cs_num, d.a)) == std::strong_ordering::greater;
    }
    ++out.checked;
    if (!holds) {
      ++out.violations;
      if (!out.witness) out.witness = q;
    }

    const double mid = ratio.mid_double();
    if (worst.size() < keep || mid < worst.back().ratio) {
      const auto pos = std::upper_bound(worst.begin(), worst.end(), mid,
                                        [](double v, const Candidate& x) { return v < x.ratio; });
      worst.insert(pos, Candidate{mid, q});
      if (worst.size() > keep) worst.pop_back();
    }
  }
  out.pass = out.violations == 0;
  for (const Candidate& w : worst) out.worst.push_back(make_record(w.q, a, b, bits));
  if (!worst.empty()) {
    const mpz_class& q = worst.front().q;
    out.min_ratio_q = q;
    out.min_ratio = out.worst.front().max_dist *
                    (e_iv * IntervalReal::from_integer(q, bits).log()).exp();
  }
  return out;
}

std::vector<ApproxRecord> best_records(const mpz_class& a, const mpz_class& b,
                                       const mpz_class& q_max) {
  require_pair(a, b);
  if (q_max < 1) throw InvalidInput("cap_too_small", "q_max must be at least 1");
  std::vector<ApproxRecord> out;
  std::optional<Distance> best;
  for (mpz_class q = 1; q <= q_max; ++q) {
    const Distance da = dist_nearest(q, a);
    const Distance db = dist_nearest(q, b);
    const Distance& d = larger(da, db);
    if (!best || compare(d, *best) == std::strong_ordering::less) {
      best = d;
      out.push_back(make_record(q, a, b));
    }
  }
  return out;
}

namespace {

long regulator_multiplier(const mpz_class& D) {
  return mpz_class(D % 4) == 1 ? 6 : 2;
}

}  // namespace

ExponentReport exponent_report(const mpz_class& a, const mpz_class& b, BoundRoute route) {
  constexpr mpfr_prec_t bits = 128;
  const SystemContext ctx = setup_system(a, b, 1, 1, bits);
  const EffectiveBoundReport bound = effective_bound(ctx, route, bits);
  const IntervalReal le = to_interval(ctx.eps.element, bits).log();
  const IntervalReal lh = to_interval(ctx.eta.element, bits).log();

  ExponentReport r;
  r.a = a;
  r.b = b;
  r.route = route;
  r.denominator = bound.exponent;
  r.tau = bound.exponent.inverse();
  // tau is tiny; 2 - tau and tau - 1 need enough bits to stay off 2 and -1.
  const mpfr_prec_t wide = bits - mpfr_get_exp(r.tau.lo().get()) + 64;
  r.mu_eff_upper = IntervalReal::from_integer(2, wide) - r.tau;
  r.distance_exponent = r.tau - IntervalReal::from_integer(1, wide);
  r.regulator_product = le * lh;
  r.absolute_constant = bound.absolute_constant;
  r.has_log_star_factor = bound.has_log_star_factor;
  r.log_star_factor = bound.log_star_factor;

  if (is_squarefree(a) && is_squarefree(b)) {
    const IntervalReal ra = mpz_class(regulator_multiplier(a)) * regulator_upper_bound(a, bits);
    const IntervalReal rb = mpz_class(regulator_multiplier(b)) * regulator_upper_bound(b, bits);
    if (!certainly_less_equal(le, ra) || !certainly_less_equal(lh, rb)) {
      throw InvariantViolation("regulator_bound", "log of a unit exceeds k sqrt(D)(1 + log sqrt D)");
    }
    IntervalReal den = r.absolute_constant * ra * rb;
    if (r.has_log_star_factor) den = den * log_star(max(ra, rb));
    if (!certainly_less_equal(r.denominator, den)) {
      throw InvariantViolation("sqrt_form", "square-root form undercuts the regulator form");
    }
    const IntervalReal base = IntervalReal::from_integer(a * b, bits).sqrt() *
                              IntervalReal::from_integer(a, bits).log() *
                              IntervalReal::from_integer(b, bits).log();
    IntervalReal constant = den / base;
    r.sqrt_form = SqrtForm{std::move(den), std::move(constant)};
  }
  return r;
}

}  // namespace pellian
