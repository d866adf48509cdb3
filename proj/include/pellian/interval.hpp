#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace pellian {

// Working-precision schedule for refinement loops: start at `start` bits and
// double until the consumer is satisfied or `ceiling` is passed.
struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t ceiling = 8192;
};

// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const;
  // Shortest decimal string that reads back to the same value at bits().
  std::string to_string() const;
  // Decimal string with `digits` significant digits, rounded as requested.
  std::string to_string(std::size_t digits, mpfr_rnd_t rnd) const;

 private:
  mpfr_t value_;
};

int compare(const BigFloat& a, const BigFloat& b);

// Closed real interval [lo, hi] with outward-rounded endpoints. Every
// operation returns an interval that contains the exact result for every
// choice of exact inputs inside the operand intervals. Results carry the
// larger of the operand precisions.
class IntervalReal {
 public:
  explicit IntervalReal(mpfr_prec_t bits = 128);

  static IntervalReal from_integer(const mpz_class& value, mpfr_prec_t bits);
  static IntervalReal from_rational(const mpq_class& value, mpfr_prec_t bits);
  static IntervalReal from_bounds(BigFloat lo, BigFloat hi);
  // Parses endpoints written by BigFloat::to_string() at the given precision.
  static IntervalReal parse(const std::string& lo, const std::string& hi,
                            mpfr_prec_t bits);
  static IntervalReal euler(mpfr_prec_t bits);  // e = exp(1)

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  mpfr_prec_t bits() const noexcept { return lo_.bits(); }

  bool contains(const mpq_class& value) const;
  bool contains(const IntervalReal& inner) const;
  bool excludes_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;

  // hi - lo rounded up.
  BigFloat width() const;
  // width / min |endpoint|, as a double; +inf when the interval touches 0.
  double relative_width() const;
  double mid_double() const;

  IntervalReal operator-() const;
  IntervalReal abs() const;
  IntervalReal sqrt() const;
  IntervalReal log() const;
  IntervalReal exp() const;
  IntervalReal pow(unsigned long exponent) const;
  IntervalReal inverse() const;

  // Same interval rounded outward to a different precision.
  IntervalReal with_bits(mpfr_prec_t bits) const;

  friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
  friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

IntervalReal operator*(const IntervalReal& a, const mpz_class& b);
IntervalReal operator*(const mpz_class& a, const IntervalReal& b);
IntervalReal operator/(const IntervalReal& a, const mpz_class& b);
IntervalReal operator+(const IntervalReal& a, const mpz_class& b);
IntervalReal operator-(const IntervalReal& a, const mpz_class& b);
IntervalReal operator-(const mpz_class& a, const IntervalReal& b);

// a.hi < b.lo, resp. a.hi <= b.lo: the relation holds for every pair of
// points drawn from the two intervals.
bool certainly_less(const IntervalReal& a, const IntervalReal& b);
bool certainly_less_equal(const IntervalReal& a, const IntervalReal& b);
bool overlaps(const IntervalReal& a, const IntervalReal& b);

IntervalReal max(const IntervalReal& a, const IntervalReal& b);
IntervalReal min(const IntervalReal& a, const IntervalReal& b);
// Common part of two intervals that are known to hold the same real.
IntervalReal intersect(const IntervalReal& a, const IntervalReal& b);

}  // namespace pellian
