#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "pellian/errors.hpp"
#include "pellian/quadratic.hpp"

using namespace pellian;

namespace {

QuadElement q(long x, long y, long D) { return make_element(x, y, D); }

mpq_class rat(const char* s) { return mpq_class(s); }

}  // namespace

TEST_CASE("make_element builds exact elements and rejects bad radicands") {
  const QuadElement e = q(1, 1, 2);
  CHECK(e.x() == 1);
  CHECK(e.y() == 1);
  CHECK(e.radicand() == 2);
  CHECK(q(3, 2, 2) * q(3, 2, 2) == q(17, 12, 2));

  CHECK_THROWS_AS(q(1, 0, 4), InvalidInput);
  CHECK_THROWS_AS(q(1, 0, 1), InvalidInput);
  CHECK_THROWS_AS(q(1, 0, 0), InvalidInput);
  CHECK_THROWS_AS(q(1, 0, -3), InvalidInput);
  try {
    q(1, 0, 4);
  } catch (const InvalidInput& err) {
    CHECK(err.reason() == "square_radicand");
    CHECK(err.exit_code() == 2);
  }
}

TEST_CASE("conjugate, norm and mixed-field arithmetic") {
  CHECK(q(1, 1, 2).conj() == q(1, -1, 2));
  CHECK(q(1, 1, 2).norm() == -1);
  CHECK(q(3, 2, 2).norm() == 1);
  CHECK(q(5, -7, 3).conj().conj() == q(5, -7, 3));
  CHECK_THROWS_AS(q(1, 1, 2) * q(1, 1, 3), InvalidInput);
  CHECK_THROWS_AS(q(1, 1, 2) + q(1, 1, 3), InvalidInput);
  CHECK(q(3, 2, 2).to_string() == "3+2√2");
  CHECK(q(1, -1, 3).to_string() == "1-√3");
  CHECK(q(0, -2, 5).to_string() == "-2√5");
  CHECK(q(-4, 0, 5).to_string() == "-4");
}

TEST_CASE("compare decides order exactly") {
  CHECK(compare(q(1, 1, 2), q(2, 0, 2)) == std::strong_ordering::greater);
  CHECK(compare(q(1, 1, 2), q(3, 0, 2)) == std::strong_ordering::less);
  CHECK(compare(q(1, -1, 2), q(0, 0, 2)) == std::strong_ordering::less);
  CHECK(compare(q(-1, 1, 2), q(0, 0, 2)) == std::strong_ordering::greater);
  CHECK(compare(q(7, 5, 2), q(7, 5, 2)) == std::strong_ordering::equal);
  // 99 - 70 sqrt 2 is tiny but positive.
  CHECK(q(99, -70, 2).sign() == 1);
  CHECK(q(-99, 70, 2).sign() == -1);

  // Across fields: sqrt 2 + 1 vs sqrt 3 + 0.7 style comparisons, and equal
  // reals written in different radicands.
  CHECK(compare_across(q(1, 1, 2), q(0, 1, 5)) == std::strong_ordering::greater);
  CHECK(compare_across(q(0, 1, 3), q(0, 1, 2)) == std::strong_ordering::greater);
  CHECK(compare_across(q(0, 2, 2), q(0, 1, 8)) == std::strong_ordering::equal);
  CHECK(compare_across(q(17, 12, 2), q(7, 4, 3)) == std::strong_ordering::greater);
  CHECK(compare_across(q(-3, 1, 2), q(1, -1, 3)) == std::strong_ordering::less);
}

TEST_CASE("to_interval encloses the value with the promised width") {
  const IntervalReal v = to_interval(q(1, 1, 2), 64);
  CHECK(testutil::agrees(v, "2.414213562373095048"));
  CHECK(v.width().to_double() < 1e-15);

  const IntervalReal three = to_interval(q(3, 0, 2), 64);
  CHECK(compare(three.lo(), three.hi()) == 0);
  CHECK(three.contains(3));

  const IntervalReal c = to_interval(q(1, 1, 2).conj(), 64);
  CHECK(c.certainly_negative());
  CHECK(testutil::agrees(c, "-0.414213562373095048"));
  CHECK(c.relative_width() < 4.0 / 18446744073709551616.0);

  // Massive cancellation: (1 - sqrt 2)^40 still gets full relative precision.
  const QuadElement tiny = q(1, -1, 2).pow(40);
  CHECK(to_interval(tiny, 128).relative_width() < std::ldexp(4.0, -128));
}

TEST_CASE("to_interval agrees with exact comparison on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const long D = 2 + static_cast<long>(rng() % 300);
    if (is_perfect_square(D)) continue;
    const long x1 = static_cast<long>(rng() % 20001) - 10000;
    const long y1 = static_cast<long>(rng() % 2001) - 1000;
    const long x2 = static_cast<long>(rng() % 20001) - 10000;
    const long y2 = static_cast<long>(rng() % 2001) - 1000;
    const QuadElement a = q(x1, y1, D), b = q(x2, y2, D);
    for (mpfr_prec_t bits : {24, 64, 200}) {
      const IntervalReal ia = to_interval(a, bits), ib = to_interval(b, bits);
      const auto ord = compare(a, b);
      if (certainly_less(ia, ib)) CHECK(ord == std::strong_ordering::less);
      if (certainly_less(ib, ia)) CHECK(ord == std::strong_ordering::greater);
      // Rational probes on either side of the value.
      const mpq_class probe(x1 * 7 + 3, 7);
      const auto cmp_probe = compare(7 * a, QuadElement::integer(7 * x1 + 3, D));
      if (mpfr_cmp_q(ia.hi().get(), probe.get_mpq_t()) < 0) {
        CHECK(cmp_probe == std::strong_ordering::less);
      }
      if (mpfr_cmp_q(ia.lo().get(), probe.get_mpq_t()) > 0) {
        CHECK(cmp_probe == std::strong_ordering::greater);
      }
    }
    // After enough refinement distinct values never straddle.
    if (a != b) CHECK(!overlaps(to_interval(a, 512), to_interval(b, 512)));
  }
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const long D = 2 + static_cast<long>(rng() % 1000);
    if (is_perfect_square(D)) continue;
    const QuadElement a = q(static_cast<long>(rng() % 2001) - 1000,
                            static_cast<long>(rng() % 2001) - 1000, D);
    const QuadElement b = q(static_cast<long>(rng() % 2001) - 1000,
                            static_cast<long>(rng() % 2001) - 1000, D);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("sqrt_cf gives the minimal period") {
  auto check = [](long D, long a0, std::vector<long> period) {
    const CFExpansion cf = sqrt_cf(D);
    CHECK(cf.a0 == a0);
    REQUIRE(cf.period.size() == period.size());
    for (std::size_t i = 0; i < period.size(); ++i) CHECK(cf.period[i] == period[i]);
  };
  check(2, 1, {2});
  check(3, 1, {1, 2});
  check(13, 3, {1, 1, 1, 1, 6});
  CHECK_THROWS_AS(sqrt_cf(49), InvalidInput);

  for (long D = 2; D <= 200; ++D) {
    if (is_perfect_square(D)) continue;
    const CFExpansion cf = sqrt_cf(D);
    CHECK(cf.period.back() == 2 * cf.a0);
    const std::size_t len = cf.period.size();
    const auto brute = oracle::sqrt_partial_quotients(D, 1 + 3 * len);
    REQUIRE(brute.size() == 1 + 3 * len);
    CHECK(brute[0] == cf.a0);
    for (std::size_t i = 0; i < 3 * len; ++i) CHECK(brute[1 + i] == cf.period[i % len]);
    // No shorter period fits the brute-force quotients.
    for (std::size_t p = 1; p < len; ++p) {
      bool periodic = true;
      for (std::size_t i = 0; i + p < 3 * len; ++i) {
        if (brute[1 + i] != brute[1 + i + p]) periodic = false;
      }
      CHECK_FALSE(periodic);
    }
  }
}

TEST_CASE("fundamental units match the brute-force minimal solution") {
  const Unit u2 = fundamental_unit(2);
  CHECK(u2.element == q(1, 1, 2));
  CHECK(u2.norm == -1);
  const Unit u3 = fundamental_unit(3);
  CHECK(u3.element == q(2, 1, 3));
  CHECK(u3.norm == 1);
  const Unit u5 = fundamental_unit(5);
  CHECK(u5.element == q(2, 1, 5));
  CHECK(u5.norm == -1);

  for (unsigned long D = 2; D <= 130; ++D) {
    if (is_perfect_square(D)) continue;
    const Unit u = fundamental_unit(D);
    const oracle::MinimalUnit m = oracle::minimal_unit(D);
    CHECK(u.element.x() == mpz_class(std::to_string(m.x)));
    CHECK(u.element.y() == mpz_class(std::to_string(m.y)));
    CHECK(u.norm == m.norm);
  }
}

TEST_CASE("totally positive units") {
  const Unit t2 = totally_positive_unit(2);
  CHECK(t2.element == q(3, 2, 2));
  CHECK(t2.norm == 1);
  CHECK(t2.totally_positive);
  CHECK(totally_positive_unit(3).element == q(2, 1, 3));
  CHECK(totally_positive_unit(5).element == q(9, 4, 5));

  for (long D = 2; D <= 200; ++D) {
    if (is_perfect_square(D)) continue;
    const Unit t = totally_positive_unit(D);
    CHECK(at_least_golden_ratio(t.element));
    CHECK(t.element.conj().sign() > 0);
    CHECK(t.regulator.certainly_positive());
  }
  CHECK(at_least_golden_ratio(q(2, 0, 5)));
  CHECK_FALSE(at_least_golden_ratio(q(1, 0, 5)));
  // (1 + sqrt 5)/2 itself is not in Z[sqrt 5]; 2 sqrt 5 - 3 is just below.
  CHECK_FALSE(at_least_golden_ratio(q(-3, 2, 5)));
}

TEST_CASE("regulator_check") {
  const IntervalReal r2 = regulator_check(2);
  CHECK(testutil::agrees(r2, "0.881373587019543025232609324979"));
  CHECK(r2.lo().to_double() > 0.8813);
  CHECK(r2.hi().to_double() < 0.8815);
  CHECK(testutil::agrees(regulator_upper_bound(2), "1.904342634107368644658639586027"));

  const IntervalReal r3 = regulator_check(3);
  CHECK(testutil::agrees(r3, "1.316957896924816708625046347307"));
  CHECK(testutil::agrees(regulator_upper_bound(3), "2.683476958465223259307028000322"));

  CHECK_THROWS_AS(regulator_check(4), InvalidInput);
  CHECK_THROWS_AS(regulator_check(5), InvalidInput);   // 1 mod 4
  CHECK_THROWS_AS(regulator_check(12), InvalidInput);  // not squarefree

  for (long D = 2; D <= 200; ++D) {
    if (!is_squarefree(D) || (D % 4 != 2 && D % 4 != 3)) continue;
    CHECK_NOTHROW(regulator_check(D));
  }
}

TEST_CASE("squarefree core") {
  CHECK(squarefree_core(8) == 2);
  CHECK(squarefree_core(12) == 3);
  CHECK(squarefree_core(180) == 5);
  CHECK(squarefree_core(7) == 7);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(18));
}
