#include "pellian/bounds.hpp"

#include "pellian/errors.hpp"

namespace pellian {

namespace {

IntervalReal point_upper(const IntervalReal& v) {
  return IntervalReal::from_bounds(v.hi(), v.hi());
}

IntervalReal one(mpfr_prec_t bits) { return IntervalReal::from_integer(1, bits); }

}  // namespace

IntervalReal weil_height(const mpq_class& value, mpfr_prec_t bits) {
  if (sgn(value) == 0) throw InvalidInput("zero_height", "height of 0 is undefined");
  mpq_class v = value;
  v.canonicalize();
  const mpz_class top = abs(v.get_num());
  const mpz_class& bottom = v.get_den();
  return IntervalReal::from_integer(top > bottom ? top : bottom, bits).log();
}

IntervalReal weil_height(const QuadElement& numerator,
                         const mpz_class& denominator, mpfr_prec_t bits) {
  if (sgn(denominator) <= 0) {
    throw InvalidInput("bad_denominator", "denominator must be positive");
  }
  if (sgn(numerator.x()) == 0 && sgn(numerator.y()) == 0) {
    throw InvalidInput("zero_height", "height of 0 is undefined");
  }
  if (sgn(numerator.y()) == 0) {
    return weil_height(mpq_class(numerator.x(), denominator), bits);
  }
  // gamma = (x + y sqrt D) / den is a root of den^2 t^2 - 2 x den t + N.
  const mpz_class lead = denominator * denominator;
  const mpz_class mid = 2 * numerator.x() * denominator;
  const mpz_class tail = numerator.norm();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), mid.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tail.get_mpz_t());
  const mpz_class primitive_lead = lead / g;

  const IntervalReal den = IntervalReal::from_integer(denominator, bits);
  const IntervalReal c1 = (to_interval(numerator, bits) / den).abs();
  const IntervalReal c2 = (to_interval(numerator.conj(), bits) / den).abs();
  const IntervalReal mahler =
      primitive_lead * (max(one(bits), c1) * max(one(bits), c2));
  return mahler.log() / IntervalReal::from_integer(2, bits);
}

IntervalReal log_star(const IntervalReal& x) {
  if (!x.certainly_positive()) {
    throw InvalidInput("log_star_domain", "log* needs a positive argument");
  }
  return max(one(x.bits()), x.log());
}

IntervalReal certified_log_a(const IntervalReal& height,
                             const IntervalReal& abs_log, unsigned degree) {
  if (degree == 0) throw InvalidInput("zero_degree", "degree must be positive");
  const mpfr_prec_t bits = std::max(height.bits(), abs_log.bits());
  const IntervalReal deg = IntervalReal::from_integer(degree, bits);
  const IntervalReal scaled = IntervalReal::euler(bits) / deg * abs_log;
  const IntervalReal floor = one(bits) / deg;
  return point_upper(max(max(height, scaled), floor));
}

IntervalReal bprime_of(std::span<const mpz_class> b,
                       std::span<const IntervalReal> log_a, unsigned degree) {
  if (b.empty() || b.size() != log_a.size()) {
    throw InvalidInput("shape", "b and log A must be nonempty and of equal length");
  }
  const std::size_t n = b.size();
  if (sgn(b[n - 1]) == 0) throw InvalidInput("b_n_zero", "b_n must be nonzero");
  const mpfr_prec_t bits = log_a.front().bits();
  IntervalReal best = IntervalReal::from_integer(3 * degree, bits);
  const IntervalReal bn = IntervalReal::from_integer(abs(b[n - 1]), bits);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const IntervalReal term =
        bn / log_a[j] + IntervalReal::from_integer(abs(b[j]), bits) / log_a[n - 1];
    best = max(best, term);
  }
  return best;
}

namespace {

void check_linform(const LinFormInstance& inst) {
  if (inst.n == 0 || inst.b.size() != inst.n || inst.log_a.size() != inst.n) {
    throw InvalidInput("shape", "instance sizes disagree with n");
  }
  if (inst.degree == 0) throw InvalidInput("zero_degree", "degree must be positive");
  if (sgn(inst.b.back()) == 0) throw InvalidInput("b_n_zero", "b_n must be nonzero");
  const mpq_class floor(1, inst.degree);
  for (const IntervalReal& la : inst.log_a) {
    if (mpfr_cmp_q(la.lo().get(), floor.get_mpq_t()) < 0) {
      throw InvalidInput("log_a_too_small", "log A_j must be >= 1/degree");
    }
  }
  const IntervalReal needed = bprime_of(inst.b, inst.log_a, inst.degree);
  if (!certainly_less_equal(needed, inst.b_prime)) {
    throw InvalidInput("b_prime_too_small", "B' is below its admissible minimum");
  }
}

}  // namespace

LinFormInstance make_linform(std::vector<mpz_class> b,
                             std::vector<IntervalReal> log_a, unsigned degree) {
  IntervalReal bp = point_upper(bprime_of(b, log_a, degree));
  return make_linform(std::move(b), std::move(log_a), degree, std::move(bp));
}

LinFormInstance make_linform(std::vector<mpz_class> b,
                             std::vector<IntervalReal> log_a, unsigned degree,
                             IntervalReal b_prime) {
  LinFormInstance inst{static_cast<unsigned>(b.size()), degree, std::move(log_a),
                       std::move(b), std::move(b_prime)};
  check_linform(inst);
  return inst;
}

mpz_class linear_form_prefactor(unsigned n, unsigned degree) {
  mpz_class two, nn, dd;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, n + 26);
  mpz_ui_pow_ui(nn.get_mpz_t(), n, 3 * n + 9);
  mpz_ui_pow_ui(dd.get_mpz_t(), degree, n + 2);
  return two * nn * dd;
}

IntervalReal linear_form_lower_bound(const LinFormInstance& inst) {
  check_linform(inst);
  const mpfr_prec_t bits = inst.b_prime.bits();
  IntervalReal m = IntervalReal::from_integer(linear_form_prefactor(inst.n, inst.degree), bits);
  m = m * IntervalReal::from_integer(3 * inst.degree, bits).log();
  for (const IntervalReal& la : inst.log_a) m = m * la;
  return m * inst.b_prime.log();
}

void check_bombieri_instance(const BombieriInstance& inst) {
  if (inst.degree == 0) throw InvalidInput("zero_degree", "degree must be positive");
  if (sgn(inst.kappa) <= 0 || inst.kappa > 1) {
    throw InvalidInput("kappa_range", "kappa must lie in (0, 1]");
  }
  if (inst.generator_heights.empty()) {
    throw InvalidInput("no_generators", "at least one generator is required");
  }
  for (const IntervalReal& h : inst.generator_heights) {
    if (mpfr_sgn(h.lo().get()) < 0) throw InvalidInput("negative_height", "heights are >= 0");
  }
  if (mpfr_sgn(inst.height_a.lo().get()) < 0) {
    throw InvalidInput("negative_height", "heights are >= 0");
  }
}

BombieriBound bombieri_height_bound(const BombieriInstance& inst) {
  check_bombieri_instance(inst);
  const mpfr_prec_t bits = inst.height_a.bits();
  const unsigned long t = inst.generator_heights.size();
  const IntervalReal d = IntervalReal::from_integer(inst.degree, bits);
  const IntervalReal kappa = IntervalReal::from_rational(inst.kappa, bits);

  mpz_class lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), 10, 19);
  lead *= 4;
  IntervalReal C = IntervalReal::from_integer(lead, bits) * d.pow(4) *
                   IntervalReal::from_integer(3 * inst.degree, bits).log().pow(7) /
                   kappa;
  C = C * log_star(IntervalReal::from_rational(mpq_class(inst.degree) / inst.kappa, bits));

  IntervalReal Q = (IntervalReal::from_integer(2 * t, bits) * C).pow(t);
  for (const IntervalReal& h : inst.generator_heights) Q = Q * h;

  IntervalReal bound = IntervalReal::from_integer(10, bits) * Q * max(inst.height_a, Q);
  return {std::move(C), std::move(Q), std::move(bound)};
}

}  // namespace pellian
