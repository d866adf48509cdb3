#include "pellian/quadratic.hpp"

#include <utility>

#include "pellian/errors.hpp"

namespace pellian {

bool is_perfect_square(const mpz_class& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class isqrt(const mpz_class& n) {
  if (sgn(n) < 0) throw InvalidInput("negative_sqrt", "isqrt of a negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_squarefree(const mpz_class& n) {
  return squarefree_core(n) == n;
}

mpz_class squarefree_core(const mpz_class& n) {
  if (sgn(n) <= 0) throw InvalidInput("nonpositive", "squarefree core of a nonpositive integer");
  mpz_class rest = n;
  mpz_class core = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) core *= p;
  }
  return core * rest;
}

void require_radicand(const mpz_class& D) {
  if (D < 2) {
    throw InvalidInput("nonpositive_radicand",
                       "radicand must be >= 2, got " + D.get_str());
  }
  if (is_perfect_square(D)) {
    throw InvalidInput("square_radicand",
                       "radicand " + D.get_str() + " is a perfect square");
  }
}

// ------------------------------------------------------------- QuadElement

QuadElement::QuadElement(Trusted, mpz_class x, mpz_class y, mpz_class D)
    : x_(std::move(x)), y_(std::move(y)), D_(std::move(D)) {}

QuadElement::QuadElement(mpz_class x, mpz_class y, mpz_class D)
    : x_(std::move(x)), y_(std::move(y)), D_(std::move(D)) {
  require_radicand(D_);
}

QuadElement QuadElement::trusted(mpz_class x, mpz_class y, mpz_class D) {
  return QuadElement(Trusted{}, std::move(x), std::move(y), std::move(D));
}

QuadElement QuadElement::integer(const mpz_class& value, const mpz_class& D) {
  return trusted(value, 0, D);
}

QuadElement make_element(const mpz_class& x, const mpz_class& y,
                         const mpz_class& D) {
  return QuadElement(x, y, D);
}

namespace {

void require_same_field(const QuadElement& a, const QuadElement& b) {
  if (a.radicand() != b.radicand()) {
    throw InvalidInput("incompatible_fields",
                       "radicands " + a.radicand().get_str() + " and " +
                           b.radicand().get_str() + " differ");
  }
}

int sgn_of(const mpz_class& v) { return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0); }

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

QuadElement QuadElement::conj() const { return trusted(x_, -y_, D_); }

mpz_class QuadElement::norm() const { return x_ * x_ - D_ * y_ * y_; }

int QuadElement::sign() const {
  const int sx = sgn_of(x_);
  const int sy = sgn_of(y_);
  if (sx >= 0 && sy >= 0) return (sx > 0 || sy > 0) ? 1 : 0;
  if (sx <= 0 && sy <= 0) return -1;
  // Mixed signs: |x| vs |y| sqrt(D) decided by x^2 vs D y^2 (never equal).
  const int cmp = sgn_of(norm());
  return sx > 0 ? cmp : -cmp;
}

QuadElement QuadElement::abs() const { return sign() < 0 ? -*this : *this; }

QuadElement QuadElement::pow(unsigned long exponent) const {
  QuadElement result = integer(1, D_);
  QuadElement base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string QuadElement::to_string() const {
  if (sgn(y_) == 0) return x_.get_str();
  std::string out;
  if (sgn(x_) != 0) out = x_.get_str();
  const mpz_class ay = ::abs(y_);
  if (sgn(y_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (ay != 1) out += ay.get_str();
  out += "√" + D_.get_str();
  return out;
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return QuadElement::trusted(a.x_ + b.x_, a.y_ + b.y_, a.D_);
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return QuadElement::trusted(a.x_ - b.x_, a.y_ - b.y_, a.D_);
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  return QuadElement::trusted(a.x_ * b.x_ + a.D_ * a.y_ * b.y_,
                              a.x_ * b.y_ + a.y_ * b.x_, a.D_);
}

QuadElement operator*(const mpz_class& k, const QuadElement& a) {
  return QuadElement::trusted(k * a.x_, k * a.y_, a.D_);
}

QuadElement QuadElement::operator-() const { return trusted(-x_, -y_, D_); }

std::strong_ordering compare(const QuadElement& a, const QuadElement& b) {
  return to_ordering((a - b).sign());
}

std::strong_ordering compare_across(const QuadElement& a, const QuadElement& b) {
  if (a.radicand() == b.radicand()) return compare(a, b);
  // sign of L - R with L = (xa - xb) + ya sqrt(a), R = yb sqrt(b).
  const QuadElement left =
      QuadElement::trusted(a.x() - b.x(), a.y(), a.radicand());
  const int sl = left.sign();
  const int sr = sgn_of(b.y());
  if (sl != sr || sl == 0) return to_ordering(sl - sr);
  const QuadElement sq = left * left;
  const mpz_class rr = b.y() * b.y() * b.radicand();
  const int s = (sq - QuadElement::integer(rr, a.radicand())).sign();
  return to_ordering(sl > 0 ? s : -s);
}

IntervalReal sqrt_interval(const mpz_class& n, mpfr_prec_t bits) {
  return IntervalReal::from_integer(n, bits).sqrt();
}

IntervalReal to_interval(const QuadElement& e, mpfr_prec_t bits) {
  const mpfr_prec_t work = bits + 8;
  const int sx = sgn(e.x());
  const int sy = sgn(e.y());
  if (sy == 0) return IntervalReal::from_integer(e.x(), work);
  const IntervalReal root = sqrt_interval(e.radicand(), work);
  if (sx == 0 || (sx > 0) == (sy > 0)) {
    return IntervalReal::from_integer(e.x(), work) + root * e.y();
  }
  // x + y sqrt D = N / (x - y sqrt D), both terms of the denominator share
  // a sign so no cancellation occurs.
  const IntervalReal denom = IntervalReal::from_integer(e.x(), work) - root * e.y();
  return IntervalReal::from_integer(e.norm(), work) / denom;
}

bool at_least_golden_ratio(const QuadElement& e) {
  if (e.sign() <= 0) return false;
  const QuadElement one = QuadElement::integer(1, e.radicand());
  return (e * e - e - one).sign() >= 0;
}

// ------------------------------------------------------ continued fractions

CFExpansion sqrt_cf(const mpz_class& D) {
  require_radicand(D);
  CFExpansion cf{isqrt(D), {}, D};
  mpz_class P = 0;
  mpz_class Q = 1;
  mpz_class a = cf.a0;
  do {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (cf.a0 + P) / Q;
    cf.period.push_back(a);
  } while (Q != 1);
  return cf;
}

// -------------------------------------------------------------------- units

void check_unit(const Unit& unit) {
  const QuadElement& e = unit.element;
  const mpz_class n = e.norm();
  if (n != unit.norm || (n != 1 && n != -1)) {
    throw InvariantViolation("unit_norm", "unit " + e.to_string() + " has norm " + n.get_str());
  }
  if (compare(e, QuadElement::integer(1, e.radicand())) != std::strong_ordering::greater) {
    throw InvariantViolation("unit_not_above_one", "unit " + e.to_string() + " is not > 1");
  }
  if (unit.totally_positive) {
    if (unit.norm != 1 || e.conj().sign() <= 0) {
      throw InvariantViolation("unit_not_totally_positive", e.to_string());
    }
    if (!at_least_golden_ratio(e)) {
      throw InvariantViolation("unit_below_golden_ratio", e.to_string());
    }
  }
}

namespace {

Unit make_unit(QuadElement e, bool totally_positive, mpfr_prec_t bits) {
  const int n = e.norm() > 0 ? 1 : -1;
  IntervalReal reg = to_interval(e, bits).log();
  Unit u{std::move(e), n, std::move(reg), totally_positive};
  check_unit(u);
  return u;
}

}  // namespace

Unit fundamental_unit(const mpz_class& D, mpfr_prec_t bits) {
  const CFExpansion cf = sqrt_cf(D);
  // Convergents p_k / q_k of [a0; a1, ...]; stop at k = period - 1.
  mpz_class p_prev = 1, p = cf.a0;
  mpz_class q_prev = 0, q = 1;
  for (std::size_t k = 0; k + 1 < cf.period.size(); ++k) {
    const mpz_class& a = cf.period[k];
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return make_unit(QuadElement::trusted(p, q, D), false, bits);
}

Unit totally_positive_unit(const mpz_class& D, mpfr_prec_t bits) {
  Unit fu = fundamental_unit(D, bits);
  if (fu.norm == 1) {
    fu.totally_positive = true;
    check_unit(fu);
    return fu;
  }
  return make_unit(fu.element * fu.element, true, bits);
}

IntervalReal regulator_upper_bound(const mpz_class& D, mpfr_prec_t bits) {
  const IntervalReal root = sqrt_interval(D, bits);
  return root * (root.log() + mpz_class(1));
}

IntervalReal regulator_check(const mpz_class& D, mpfr_prec_t bits) {
  require_radicand(D);
  if (!is_squarefree(D)) {
    throw InvalidInput("not_squarefree", D.get_str() + " is not squarefree");
  }
  const mpz_class r = D % 4;
  if (r != 2 && r != 3) {
    throw InvalidInput("non_maximal_order",
                       "Z[sqrt " + D.get_str() + "] is not the maximal order");
  }
  IntervalReal reg = fundamental_unit(D, bits).regulator;
  if (!certainly_less(reg, regulator_upper_bound(D, bits))) {
    throw InvariantViolation("regulator_bound",
                             "regulator bound failed for D = " + D.get_str());
  }
  return reg;
}

}  // namespace pellian
