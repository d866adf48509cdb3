#include "pellian/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "pellian/errors.hpp"

namespace pellian {

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double(mpfr_rnd_t rnd) const {
  return mpfr_get_d(value_, rnd);
}

namespace {

std::string format_decimal(mpfr_srcptr x, std::size_t digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, digits, x, rnd), mpfr_free_str);
  std::string mantissa(raw.get());
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  const long shift = static_cast<long>(exponent) - 1;
  if (shift != 0) out += "e" + std::to_string(shift);
  return out;
}

}  // namespace

std::string BigFloat::to_string() const {
  return format_decimal(value_, 0, MPFR_RNDN);
}

std::string BigFloat::to_string(std::size_t digits, mpfr_rnd_t rnd) const {
  return format_decimal(value_, std::max<std::size_t>(digits, 2), rnd);
}

int compare(const BigFloat& a, const BigFloat& b) {
  return mpfr_cmp(a.get(), b.get());
}

// ------------------------------------------------------------ IntervalReal

namespace {

[[noreturn]] void domain_error(const std::string& what) {
  throw InvalidInput("interval_domain", what);
}

mpfr_prec_t join(const IntervalReal& a, const IntervalReal& b) {
  return std::max(a.bits(), b.bits());
}

}  // namespace

IntervalReal::IntervalReal(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

IntervalReal IntervalReal::from_integer(const mpz_class& value,
                                        mpfr_prec_t bits) {
  IntervalReal r(bits);
  mpfr_set_z(r.lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), value.get_mpz_t(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::from_rational(const mpq_class& value,
                                         mpfr_prec_t bits) {
  IntervalReal r(bits);
  mpfr_set_q(r.lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::from_bounds(BigFloat lo, BigFloat hi) {
  if (mpfr_nan_p(lo.get()) || mpfr_nan_p(hi.get()) || compare(lo, hi) > 0) {
    throw InvalidInput("interval_order", "interval endpoints out of order");
  }
  const mpfr_prec_t bits = std::max(lo.bits(), hi.bits());
  IntervalReal r(bits);
  mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::parse(const std::string& lo, const std::string& hi,
                                 mpfr_prec_t bits) {
  BigFloat l(bits), h(bits);
  if (mpfr_set_str(l.get(), lo.c_str(), 10, MPFR_RNDN) != 0 ||
      mpfr_set_str(h.get(), hi.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidInput("interval_parse", "malformed interval endpoint");
  }
  return from_bounds(std::move(l), std::move(h));
}

IntervalReal IntervalReal::euler(mpfr_prec_t bits) {
  return IntervalReal::from_integer(1, bits).exp();
}

bool IntervalReal::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool IntervalReal::contains(const IntervalReal& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(inner.hi_, hi_) <= 0;
}

bool IntervalReal::excludes_zero() const {
  return certainly_positive() || certainly_negative();
}

bool IntervalReal::certainly_positive() const {
  return mpfr_sgn(lo_.get()) > 0;
}

bool IntervalReal::certainly_negative() const {
  return mpfr_sgn(hi_.get()) < 0;
}

BigFloat IntervalReal::width() const {
  BigFloat w(bits());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

double IntervalReal::relative_width() const {
  if (!excludes_zero()) return std::numeric_limits<double>::infinity();
  BigFloat w = width();
  BigFloat m(bits());
  if (certainly_positive()) {
    mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
  }
  mpfr_div(w.get(), w.get(), m.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

double IntervalReal::mid_double() const {
  BigFloat m(bits() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

IntervalReal IntervalReal::operator-() const {
  IntervalReal r(bits());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  IntervalReal r(bits());
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::sqrt() const {
  if (mpfr_sgn(lo_.get()) < 0) domain_error("sqrt of interval with negative part");
  IntervalReal r(bits());
  mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::log() const {
  if (!certainly_positive()) domain_error("log of interval not bounded away from 0");
  IntervalReal r(bits());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::exp() const {
  IntervalReal r(bits());
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::pow(unsigned long exponent) const {
  if (exponent == 0) return from_integer(1, bits());
  IntervalReal r(bits());
  if (exponent % 2 == 1) {
    mpfr_pow_ui(r.lo_.get(), lo_.get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), hi_.get(), exponent, MPFR_RNDU);
    return r;
  }
  const IntervalReal m = abs();
  mpfr_pow_ui(r.lo_.get(), m.lo_.get(), exponent, MPFR_RNDD);
  mpfr_pow_ui(r.hi_.get(), m.hi_.get(), exponent, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::inverse() const {
  if (!excludes_zero()) domain_error("inverse of interval containing 0");
  IntervalReal r(bits());
  mpfr_ui_div(r.lo_.get(), 1, hi_.get(), MPFR_RNDD);
  mpfr_ui_div(r.hi_.get(), 1, lo_.get(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::with_bits(mpfr_prec_t bits) const {
  IntervalReal r(bits);
  mpfr_set(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
  IntervalReal r(join(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
  IntervalReal r(join(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
  const mpfr_prec_t bits = join(a, b);
  IntervalReal r(bits);
  BigFloat down(bits), up(bits);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
    for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
      mpfr_mul(down.get(), x, y, MPFR_RNDD);
      mpfr_mul(up.get(), x, y, MPFR_RNDU);
      if (first) {
        mpfr_set(r.lo_.get(), down.get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), up.get(), MPFR_RNDU);
        first = false;
      } else {
        mpfr_min(r.lo_.get(), r.lo_.get(), down.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), r.hi_.get(), up.get(), MPFR_RNDU);
      }
    }
  }
  return r;
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b) {
  if (!b.excludes_zero()) domain_error("division by interval containing 0");
  const mpfr_prec_t bits = join(a, b);
  IntervalReal r(bits);
  BigFloat down(bits), up(bits);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_.get(), a.hi_.get()}) {
    for (mpfr_srcptr y : {b.lo_.get(), b.hi_.get()}) {
      mpfr_div(down.get(), x, y, MPFR_RNDD);
      mpfr_div(up.get(), x, y, MPFR_RNDU);
      if (first) {
        mpfr_set(r.lo_.get(), down.get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), up.get(), MPFR_RNDU);
        first = false;
      } else {
        mpfr_min(r.lo_.get(), r.lo_.get(), down.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), r.hi_.get(), up.get(), MPFR_RNDU);
      }
    }
  }
  return r;
}

IntervalReal operator*(const IntervalReal& a, const mpz_class& b) {
  return a * IntervalReal::from_integer(b, a.bits());
}

IntervalReal operator*(const mpz_class& a, const IntervalReal& b) {
  return IntervalReal::from_integer(a, b.bits()) * b;
}

IntervalReal operator/(const IntervalReal& a, const mpz_class& b) {
  return a / IntervalReal::from_integer(b, a.bits());
}

IntervalReal operator+(const IntervalReal& a, const mpz_class& b) {
  return a + IntervalReal::from_integer(b, a.bits());
}

IntervalReal operator-(const IntervalReal& a, const mpz_class& b) {
  return a - IntervalReal::from_integer(b, a.bits());
}

IntervalReal operator-(const mpz_class& a, const IntervalReal& b) {
  return IntervalReal::from_integer(a, b.bits()) - b;
}

bool certainly_less(const IntervalReal& a, const IntervalReal& b) {
  return compare(a.hi(), b.lo()) < 0;
}

bool certainly_less_equal(const IntervalReal& a, const IntervalReal& b) {
  return compare(a.hi(), b.lo()) <= 0;
}

bool overlaps(const IntervalReal& a, const IntervalReal& b) {
  return compare(a.lo(), b.hi()) <= 0 && compare(b.lo(), a.hi()) <= 0;
}

IntervalReal max(const IntervalReal& a, const IntervalReal& b) {
  BigFloat lo(join(a, b)), hi(join(a, b));
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return IntervalReal::from_bounds(std::move(lo), std::move(hi));
}

IntervalReal min(const IntervalReal& a, const IntervalReal& b) {
  BigFloat lo(join(a, b)), hi(join(a, b));
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return IntervalReal::from_bounds(std::move(lo), std::move(hi));
}

IntervalReal intersect(const IntervalReal& a, const IntervalReal& b) {
  if (!overlaps(a, b)) {
    throw InvariantViolation("disjoint_enclosures",
                             "two enclosures of the same real are disjoint");
  }
  BigFloat lo(join(a, b)), hi(join(a, b));
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return IntervalReal::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace pellian
