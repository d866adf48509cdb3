#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pellian/interval.hpp"
#include "pellian/quadratic.hpp"
#include "pellian/system.hpp"

namespace pellian {

// Exact decimal or fraction: "1e-7", "1.913", "-2.5E3", "3/4".
mpq_class parse_decimal(const std::string& text);

// ||q sqrt a||, certified by f = isqrt(a q^2): f^2 <= a q^2 < (f+1)^2.
struct Distance {
  mpz_class q;
  mpz_class a;
  mpz_class f;
  bool above = false;  // nearest integer is f + 1

  // q sqrt a - f, or f + 1 - q sqrt a, as an exact element of Z[sqrt a].
  QuadElement value() const;
  IntervalReal interval(mpfr_prec_t bits) const;
};

Distance dist_nearest(const mpz_class& q, const mpz_class& a);

std::strong_ordering compare(const Distance& x, const Distance& y);
std::strong_ordering compare(const Distance& x, const mpq_class& c);

struct ApproxRecord {
  mpz_class q;
  Distance dist_a;
  Distance dist_b;
  IntervalReal max_dist;
  // -log(max_dist) / log q, absent for q = 1.
  std::optional<IntervalReal> local_exponent;
};

ApproxRecord make_record(const mpz_class& q, const mpz_class& a, const mpz_class& b,
                         mpfr_prec_t bits = 64);

struct VerifyResult {
  bool pass = false;
  mpz_class q_max;
  unsigned long checked = 0;
  unsigned long violations = 0;
  unsigned long exact_fallbacks = 0;
  std::optional<mpz_class> witness;  // first violating q
  // Records with the smallest max_dist * q^(mu - 1), ascending.
  std::vector<ApproxRecord> worst;
  // Empirical constant: min over q of max_dist * q^(mu - 1).
  IntervalReal min_ratio;
  mpz_class min_ratio_q;
};

// Checks max{||q sqrt a||, ||q sqrt b||} > c / q^(mu - 1) for 1 <= q <= q_max.
// Decided on intervals, with an exact fallback
//   max_dist^s q^r > c^s,  mu - 1 = r / s.
VerifyResult verify_inequality(const mpz_class& a, const mpz_class& b,
                               const mpq_class& c, const mpq_class& mu,
                               const mpz_class& q_max, std::size_t keep = 5);

// Every q that strictly lowers max{||q sqrt a||, ||q sqrt b||}.
std::vector<ApproxRecord> best_records(const mpz_class& a, const mpz_class& b,
                                       const mpz_class& q_max);

// The square-root form of the exponent, available when a, b are squarefree:
// log eps <= k R with k = 2 (D = 2, 3 mod 4) or 6 (D = 1 mod 4), and
// R < sqrt(D) (1 + log sqrt(D)).
struct SqrtForm {
  IntervalReal denominator_bound;
  // denominator_bound / (sqrt(ab) log a log b)
  IntervalReal sqrt_ab_constant;
};

struct ExponentReport {
  mpz_class a, b;
  BoundRoute route = BoundRoute::linear_forms;
  IntervalReal tau;
  IntervalReal mu_eff_upper;        // 2 - tau
  IntervalReal distance_exponent;   // -1 + tau, for ||q sqrt a||
  IntervalReal regulator_product;   // (log eps)(log eta)
  IntervalReal denominator;         // 1 / tau
  IntervalReal absolute_constant;
  bool has_log_star_factor = false;
  std::optional<IntervalReal> log_star_factor;
  std::optional<SqrtForm> sqrt_form;
};

ExponentReport exponent_report(const mpz_class& a, const mpz_class& b, BoundRoute route);

}  // namespace pellian
