#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pellian/interval.hpp"
#include "pellian/pell.hpp"
#include "pellian/quadratic.hpp"

namespace pellian {

// The system x^2 - a y^2 = u, z^2 - b y^2 = v with its units and the
// size parameter U0 = max{U, ab, eps^2, eta^2}, U = max{|u|, |v|, 2}.
struct SystemContext {
  mpz_class a, b, u, v;
  Unit eps;
  Unit eta;
  mpz_class U;
  // U0 as an exact real: an integer or eps^2 / eta^2.
  QuadElement U0_exact;
  std::string U0_source;  // "U", "ab", "eps^2" or "eta^2"
  IntervalReal U0;
  IntervalReal log_U0;
  std::vector<PellClassRep> alpha_reps;
  std::vector<PellClassRep> beta_reps;
};

// Throws InvalidInput (radicand_too_small, a_square, b_square, ab_square)
// unless 1, sqrt a, sqrt b are linearly independent over Q.
void require_pair(const mpz_class& a, const mpz_class& b);

// require_pair() plus u_zero / v_zero.
SystemContext setup_system(const mpz_class& a, const mpz_class& b,
                           const mpz_class& u, const mpz_class& v,
                           mpfr_prec_t bits = 128);

// Re-checks every SystemContext invariant exactly.
void check_context(const SystemContext& ctx);

// Lambda = |alpha beta^-1 sqrt(b/a) eps^m eta^-n - 1|.
struct LinearFormValue {
  IntervalReal lambda;
  unsigned long m = 0;
  unsigned long n = 0;
  std::size_t alpha_index = 0;
  std::size_t beta_index = 0;
  std::string form_used;
  IntervalReal direct;     // from alpha eps^m and beta eta^n
  IntervalReal conjugate;  // from the conjugates alpha' eps^-m, beta' eta^-n
  // y-coordinates of alpha eps^m and beta eta^n agree.
  bool on_solution = false;
};

// Evaluates both expressions of Lambda, doubling the precision until each
// excludes 0 and is narrow, and returns their intersection. The conjugate
// expression carries the exact correction 2 sqrt(b) (y_a - y_b) / (beta
// eta^n), which vanishes on solutions.
LinearFormValue lambda_value(const SystemContext& ctx, std::size_t alpha_index,
                             std::size_t beta_index, unsigned long m,
                             unsigned long n, PrecisionPolicy policy = {});

struct InequalityReport {
  IntervalReal log_lambda;
  IntervalReal max_term;  // max{m log eps, n log eta}
  bool large_exponent = false;    // max_term >= 12 log U0
  bool lambda_upper = false;      // log Lambda <= -n log eta + 2 log U0
  bool exponent_balance = false;  // |m log eps - n log eta| <= 4 log U0
  bool lambda_decay_asserted = false;
  // log Lambda <= -max_term + 6 log U0 and log Lambda <= -max_term / 2
  bool lambda_decay = false;

  bool all_pass() const {
    return lambda_upper && exponent_balance && (!lambda_decay_asserted || lambda_decay);
  }
};

// Each flag is true only when the inequality is certain on the intervals;
// undecided comparisons are refined and end in PrecisionExhausted.
InequalityReport inequality_chain_check(const SystemContext& ctx,
                                        const LinearFormValue& lfv,
                                        PrecisionPolicy policy = {});

enum class BoundRoute { linear_forms, bombieri };

std::string to_string(BoundRoute route);
BoundRoute parse_route(const std::string& name);

struct NamedConstant {
  std::string name;
  IntervalReal value;
};

// log X <= log_C + exponent * log U, with X = max{x, y, z}.
struct EffectiveBoundReport {
  BoundRoute route = BoundRoute::linear_forms;
  IntervalReal bound_on_max_mn;   // bound on max{m log eps, n log eta}
  IntervalReal X_log_bound;       // log_C + exponent * log U
  IntervalReal direct_log_bound;  // log U0 + bound_on_max_mn
  IntervalReal exponent;
  IntervalReal log_C;
  // exponent / ((log eps)(log eta) [log* max{log eps, log eta}])
  IntervalReal absolute_constant;
  bool has_log_star_factor = false;
  std::optional<IntervalReal> log_star_factor;
  std::vector<NamedConstant> constants;
  std::string note = "instantiated, not optimal";
};

EffectiveBoundReport effective_bound(const SystemContext& ctx, BoundRoute route,
                                     mpfr_prec_t bits = 128);

// log_C + exponent * log U for another value of U.
IntervalReal x_log_bound_at(const EffectiveBoundReport& report, const mpz_class& U);

// Throws InvariantViolation unless the linear-forms record carries the
// log* factor and the Bombieri record does not.
void check_route_structure(const EffectiveBoundReport& linear_forms,
                           const EffectiveBoundReport& bombieri);

struct SystemSolution {
  mpz_class x, y, z;
  friend bool operator==(const SystemSolution&, const SystemSolution&) = default;
};

struct SolutionSet {
  std::vector<SystemSolution> solutions;
  mpz_class y_cap;
  bool complete_under_cap = true;
  bool certified_complete = false;
  BoundRoute bound_route = BoundRoute::linear_forms;  // the smaller bound
  IntervalReal log10_bound;  // log10 of the bound on X
};

// Positive solutions with y <= y_cap, from an ordered merge of the
// y-streams of both Pell equations.
std::vector<SystemSolution> positive_solutions(const SystemContext& ctx,
                                               const mpz_class& y_cap);
// positive_solutions() plus the completeness verdict from both bounds.
SolutionSet solve_system(const SystemContext& ctx, const mpz_class& y_cap);

// (alpha_index, m, beta_index, n) with x + y sqrt a = alpha eps^m and
// z + y sqrt b = beta eta^n. Throws InvariantViolation unless unique.
struct SolutionExponents {
  std::size_t alpha_index;
  unsigned long m;
  std::size_t beta_index;
  unsigned long n;
};

SolutionExponents solution_exponents(const SystemContext& ctx,
                                     const SystemSolution& s);

}  // namespace pellian
