#include "pellian/pell.hpp"

#include <algorithm>

#include "pellian/errors.hpp"

namespace pellian {

void check_class_rep(const PellClassRep& rep) {
  const QuadElement& a = rep.alpha;
  const QuadElement& eps = rep.unit.element;
  if (a.norm() != rep.N) {
    throw InvariantViolation("rep_norm", "representative " + a.to_string() +
                                             " does not have norm " + rep.N.get_str());
  }
  if (a.sign() <= 0) {
    throw InvariantViolation("rep_not_positive", a.to_string());
  }
  const QuadElement conj_abs = a.conj().abs();
  if (compare(a, conj_abs) == std::strong_ordering::less) {
    throw InvariantViolation("rep_below_window", a.to_string());
  }
  if (compare(a, conj_abs * eps * eps) == std::strong_ordering::greater) {
    throw InvariantViolation("rep_above_window", a.to_string());
  }
}

mpz_class representative_y_bound(const mpz_class& D, const mpz_class& N,
                                 const Unit& unit) {
  const mpz_class absN = abs(N);
  const IntervalReal ratio = to_interval(unit.element, 64) *
                             sqrt_interval(absN, 64) / sqrt_interval(D, 64);
  mpz_class y;
  mpfr_get_z(y.get_mpz_t(), ratio.hi().get(), MPFR_RNDU);
  return y + 1;
}

std::vector<PellClassRep> class_representatives(const mpz_class& D,
                                                const mpz_class& N,
                                                const Unit& unit) {
  require_radicand(D);
  if (N == 0) throw InvalidInput("zero_norm", "N must be nonzero");
  if (unit.element.radicand() != D || !unit.totally_positive) {
    throw InvalidInput("unit_mismatch",
                       "expected the totally positive unit of Z[sqrt " + D.get_str() + "]");
  }
  const QuadElement eps2 = unit.element * unit.element;
  const mpz_class y_max = representative_y_bound(D, N, unit);

  std::vector<PellClassRep> reps;
  mpz_class t, x;
  for (mpz_class y = 0; y <= y_max; ++y) {
    t = D * y * y + N;
    if (sgn(t) < 0 || !is_perfect_square(t)) continue;
    x = isqrt(t);
    QuadElement alpha = QuadElement::trusted(x, y, D);
    const auto upper = compare(alpha, alpha.conj().abs() * eps2);
    if (upper == std::strong_ordering::greater) continue;
    // On the upper edge alpha / eps lies on the lower edge and was kept.
    if (upper == std::strong_ordering::equal) continue;
    PellClassRep rep{std::move(alpha), D, N, unit, reps.size()};
    check_class_rep(rep);
    if (compare(rep.alpha * rep.alpha,
                mpz_class(abs(N)) * eps2) == std::strong_ordering::greater) {
      throw InvariantViolation("rep_size", rep.alpha.to_string());
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

std::vector<GeneratedSolution> generate_solutions(const PellClassRep& rep,
                                                  const mpz_class& y_cap) {
  std::vector<GeneratedSolution> out;
  QuadElement gamma = rep.alpha;
  for (unsigned long m = 0; gamma.y() <= y_cap; ++m) {
    if (sgn(gamma.x()) < 0 || sgn(gamma.y()) < 0) {
      throw InvariantViolation("negative_coordinate", gamma.to_string());
    }
    out.push_back({gamma.x(), gamma.y(), rep.index, m});
    gamma = gamma * rep.unit.element;
  }
  return out;
}

std::vector<GeneratedSolution> solve_pell_capped(const mpz_class& D,
                                                 const mpz_class& N,
                                                 const mpz_class& y_cap) {
  const Unit eps = totally_positive_unit(D);
  std::vector<GeneratedSolution> all;
  for (const PellClassRep& rep : class_representatives(D, N, eps)) {
    auto part = generate_solutions(rep, y_cap);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const auto& a, const auto& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            all.end());
  return all;
}

std::vector<Decomposition> decompose(const QuadElement& gamma,
                                     const std::vector<PellClassRep>& reps) {
  std::vector<Decomposition> out;
  for (const PellClassRep& rep : reps) {
    if (rep.D != gamma.radicand()) continue;
    const QuadElement inverse = rep.unit.element.conj();
    QuadElement q = gamma;
    unsigned long m = 0;
    while (compare(q, rep.alpha) == std::strong_ordering::greater) {
      q = q * inverse;
      ++m;
    }
    if (q == rep.alpha) out.push_back({rep.index, m});
  }
  return out;
}

}  // namespace pellian
