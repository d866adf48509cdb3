#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "pellian/quadratic.hpp"

namespace pellian {

// Representative alpha of a solution class of x^2 - D y^2 = N under
// multiplication by the totally positive unit eps. alpha sits in the
// fundamental window
//   alpha >= |alpha'|  and  alpha / eps <= |alpha'| * eps,
// where ' is the Galois conjugate.
struct PellClassRep {
  QuadElement alpha;
  mpz_class D;
  mpz_class N;
  Unit unit;
  std::size_t index = 0;
};

// x + y sqrt(D) = alpha_{class_index} * eps^power, with x, y >= 0.
struct GeneratedSolution {
  mpz_class x;
  mpz_class y;
  std::size_t class_index = 0;
  unsigned long power = 0;
};

// Throws InvariantViolation if the representative leaves the window or has
// the wrong norm.
void check_class_rep(const PellClassRep& rep);

// Largest y any representative can have: ceil(eps sqrt|N| / sqrt D) + 1.
mpz_class representative_y_bound(const mpz_class& D, const mpz_class& N,
                                 const Unit& unit);

// All class representatives, found by exhaustive search over
// 0 <= y <= representative_y_bound(). Empty if the equation is insoluble.
std::vector<PellClassRep> class_representatives(const mpz_class& D,
                                                const mpz_class& N,
                                                const Unit& unit);

// alpha * eps^m for m = 0, 1, ... while y <= y_cap, in increasing y.
std::vector<GeneratedSolution> generate_solutions(const PellClassRep& rep,
                                                  const mpz_class& y_cap);

// Every solution with x, y >= 0 and y <= y_cap, sorted by y.
std::vector<GeneratedSolution> solve_pell_capped(const mpz_class& D,
                                                 const mpz_class& N,
                                                 const mpz_class& y_cap);

struct Decomposition {
  std::size_t class_index;
  unsigned long power;
};

// Every (class, m >= 0) with alpha_class * eps^m == gamma.
std::vector<Decomposition> decompose(const QuadElement& gamma,
                                     const std::vector<PellClassRep>& reps);

}  // namespace pellian
