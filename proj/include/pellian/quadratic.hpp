#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "pellian/interval.hpp"

namespace pellian {

bool is_perfect_square(const mpz_class& n);
// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);
bool is_squarefree(const mpz_class& n);
// Largest squarefree divisor d of n such that n / d is a perfect square.
mpz_class squarefree_core(const mpz_class& n);

// Throws InvalidInput unless D >= 2 and D is not a perfect square.
void require_radicand(const mpz_class& D);

// Exact element x + y*sqrt(D) of Z[sqrt(D)], D >= 2 nonsquare.
class QuadElement {
 public:
  QuadElement(mpz_class x, mpz_class y, mpz_class D);

  // Skips the radicand check; D must already be known valid.
  static QuadElement trusted(mpz_class x, mpz_class y, mpz_class D);
  static QuadElement integer(const mpz_class& value, const mpz_class& D);

  const mpz_class& x() const noexcept { return x_; }
  const mpz_class& y() const noexcept { return y_; }
  const mpz_class& radicand() const noexcept { return D_; }

  // Galois conjugate x - y*sqrt(D).
  QuadElement conj() const;
  // x^2 - D*y^2.
  mpz_class norm() const;
  // -1, 0 or +1, decided with integers only.
  int sign() const;
  QuadElement abs() const;
  QuadElement pow(unsigned long exponent) const;

  // e.g. "3+2√2", "1-√3", "-5".
  std::string to_string() const;

  friend bool operator==(const QuadElement& a, const QuadElement& b) = default;
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const mpz_class& k, const QuadElement& a);
  QuadElement operator-() const;

 private:
  struct Trusted {};
  QuadElement(Trusted, mpz_class x, mpz_class y, mpz_class D);

  mpz_class x_;
  mpz_class y_;
  mpz_class D_;
};

QuadElement make_element(const mpz_class& x, const mpz_class& y,
                         const mpz_class& D);

// Exact ordering of two elements of the same field.
std::strong_ordering compare(const QuadElement& a, const QuadElement& b);
// Exact ordering of reals living in possibly different fields Q(sqrt a),
// Q(sqrt b); falls back to compare() when the radicands agree.
std::strong_ordering compare_across(const QuadElement& a, const QuadElement& b);

// Enclosure of x + y*sqrt(D). Opposite-sign coordinates are evaluated as
// norm / conjugate so the relative width stays near 2^-bits.
IntervalReal to_interval(const QuadElement& e, mpfr_prec_t bits);
// Enclosure of sqrt(n) for n >= 0.
IntervalReal sqrt_interval(const mpz_class& n, mpfr_prec_t bits);

// True iff e >= (1 + sqrt 5) / 2, decided exactly.
bool at_least_golden_ratio(const QuadElement& e);

// Periodic continued fraction of sqrt(D): [a0; period...], minimal period.
struct CFExpansion {
  mpz_class a0;
  std::vector<mpz_class> period;
  mpz_class D;
};

CFExpansion sqrt_cf(const mpz_class& D);

// A unit > 1 of Z[sqrt D] together with log(element).
struct Unit {
  QuadElement element;
  int norm;
  IntervalReal regulator;
  bool totally_positive;
};

// Validates the Unit invariants; throws InvariantViolation on failure.
void check_unit(const Unit& unit);

// Smallest unit > 1 of the order Z[sqrt D] (minimal solution of
// x^2 - D y^2 = +-1), read off the end of one continued-fraction period.
Unit fundamental_unit(const mpz_class& D, mpfr_prec_t bits = 128);
// Smallest totally positive unit > 1: the fundamental unit if it has norm
// +1, its square otherwise.
Unit totally_positive_unit(const mpz_class& D, mpfr_prec_t bits = 128);

// sqrt(D) * (1 + log sqrt(D)).
IntervalReal regulator_upper_bound(const mpz_class& D, mpfr_prec_t bits = 128);
// Regulator of Q(sqrt D) for squarefree D = 2, 3 mod 4, where Z[sqrt D] is
// the maximal order. Checks R < sqrt(D) (1 + log sqrt(D)) on the interval.
IntervalReal regulator_check(const mpz_class& D, mpfr_prec_t bits = 128);

}  // namespace pellian
