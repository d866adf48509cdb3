#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "pellian/interval.hpp"
#include "pellian/quadratic.hpp"

namespace pellian {

// Absolute logarithmic Weil height of (x + y sqrt D) / denominator, from
// the primitive integer minimal polynomial:
//   h = (1/deg) log(|lead| * prod max(1, |conjugate|)).
IntervalReal weil_height(const QuadElement& numerator,
                         const mpz_class& denominator = 1,
                         mpfr_prec_t bits = 128);
IntervalReal weil_height(const mpq_class& value, mpfr_prec_t bits = 128);

// max(1, log x) for x > 0.
IntervalReal log_star(const IntervalReal& x);

// Smallest certified log A_j: the upper endpoint of
//   max{ h(alpha_j), (e / degree) |log alpha_j|, 1 / degree }
// returned as a point interval.
IntervalReal certified_log_a(const IntervalReal& height,
                             const IntervalReal& abs_log, unsigned degree);

// B' = max{ 3 degree, max_{j < n} (|b_n| / log A_j + |b_j| / log A_n) }.
IntervalReal bprime_of(std::span<const mpz_class> b,
                       std::span<const IntervalReal> log_a, unsigned degree);

// Data for the lower bound on |b_1 log alpha_1 + ... + b_n log alpha_n|
// with the refined height parameter B'.
struct LinFormInstance {
  unsigned n = 0;
  unsigned degree = 0;
  std::vector<IntervalReal> log_a;
  std::vector<mpz_class> b;
  IntervalReal b_prime;
};

// Builds an instance with B' set to the upper endpoint of bprime_of().
LinFormInstance make_linform(std::vector<mpz_class> b,
                             std::vector<IntervalReal> log_a, unsigned degree);
// Builds an instance with a caller-chosen B', checked for admissibility.
LinFormInstance make_linform(std::vector<mpz_class> b,
                             std::vector<IntervalReal> log_a, unsigned degree,
                             IntervalReal b_prime);

// 2^(n+26) n^(3n+9) degree^(n+2), exactly.
mpz_class linear_form_prefactor(unsigned n, unsigned degree);

// M with log|Lambda| >= -M for every nonzero linear form of the instance:
//   M = prefactor * log(3 degree) * prod log A_j * log B'.
IntervalReal linear_form_lower_bound(const LinFormInstance& inst);

struct BombieriInstance {
  unsigned degree = 0;
  mpq_class kappa;
  std::vector<IntervalReal> generator_heights;
  IntervalReal height_a;
};

struct BombieriBound {
  IntervalReal C;      // 4e19 d^4 (log 3d)^7 / kappa * log*(d / kappa)
  IntervalReal Q;      // (2 t C)^t prod h(xi_i)
  IntervalReal bound;  // 10 Q max{h(A), Q}
};

void check_bombieri_instance(const BombieriInstance& inst);
BombieriBound bombieri_height_bound(const BombieriInstance& inst);

}  // namespace pellian
