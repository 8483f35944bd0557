#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cfineq/errors.hpp"
#include "cfineq/oracle.hpp"
#include "cfineq/rng.hpp"
#include "cfineq/scalar_cf.hpp"

using namespace cfineq;

namespace {

void check_close(const ScalarSandwich& got, const ScalarSandwich& want,
                 double eps = 1e-13) {
  CHECK(got.lower == doctest::Approx(want.lower).epsilon(eps));
  CHECK(got.middle == doctest::Approx(want.middle).epsilon(eps));
  CHECK(got.upper == doctest::Approx(want.upper).epsilon(eps));
}

}  // namespace

TEST_CASE("young_gap") {
  CHECK(young_gap({5, 5, 0.3}) == 0.0);
  CHECK(young_gap({4, 1, 0.0}) == 0.0);
  CHECK(young_gap({4, 1, 0.5}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(young_gap({-1, 2, 0.5}), DomainError);
  CHECK_THROWS_AS(young_gap({1, 0, 0.5}), DomainError);
  CHECK_THROWS_AS(young_gap({1, 2, 1.5}), DomainError);
  CHECK_THROWS_AS(young_gap({1, 2, -0.1}), DomainError);
}

TEST_CASE("cf_sandwich_two worked values") {
  const ScalarSandwich s = cf_sandwich_two({4, 1, 0.5});
  CHECK(s.lower == 0.28125);  // dyadic, exact
  CHECK(s.upper == 1.125);
  CHECK(s.middle == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.pass());

  for (double c : {0.001, 1.0, 42.5}) {
    const ScalarSandwich z = cf_sandwich_two({c, c, 0.37});
    CHECK(z.lower == 0.0);
    CHECK(z.middle == 0.0);
    CHECK(z.upper == 0.0);
  }
  const ScalarSandwich z2 = cf_sandwich_two({4, 1, 1.0});
  CHECK(z2.middle == 0.0);
  CHECK(z2.upper == 0.0);
}

TEST_CASE("cf_sandwich_n worked values and reduction to the pair form") {
  WeightedSample equal{{3.5, 3.5, 3.5}, {0.2, 0.5, 0.3}};
  const ScalarSandwich z = cf_sandwich_n(equal);
  CHECK(z.lower == 0.0);
  CHECK(z.middle == 0.0);
  CHECK(z.upper == 0.0);

  WeightedSample two{{1, 4}, {0.5, 0.5}};
  check_close(cf_sandwich_n(two), cf_sandwich_two({4, 1, 0.5}), 1e-14);

  WeightedSample three{{1, 2, 4}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
  const ScalarSandwich s = cf_sandwich_n(three);
  CHECK(s.middle == doctest::Approx(1.0 / 3).epsilon(1e-13));
  CHECK(s.lower == doctest::Approx(7.0 / 36).epsilon(1e-13));
  CHECK(s.upper == doctest::Approx(7.0 / 9).epsilon(1e-13));
  check_close(s, oracle::hp_cf_n(three.points, three.weights), 1e-12);
}

TEST_CASE("weighted sample validation") {
  CHECK_THROWS_AS(cf_sandwich_n({{}, {}}), DomainError);
  CHECK_THROWS_AS(cf_sandwich_n({{1, 2}, {0.5}}), DomainError);
  CHECK_THROWS_AS(cf_sandwich_n({{1, -2}, {0.5, 0.5}}), DomainError);
  CHECK_THROWS_AS(cf_sandwich_n({{1, 2}, {0.5, 0.4}}), DomainError);      // sum != 1
  CHECK_THROWS_AS(cf_sandwich_n({{1, 2}, {-0.5, 1.5}}), DomainError);
}

TEST_CASE("reverse bounds") {
  CHECK(reverse_young_exp({7, 7, 0.4}) == 0.0);
  // gm * (e^{lambda(1-lambda)(a-b)^2/m^2} - 1) at (4,1,1/2) is 2(e^{9/4}-1)
  const double expected = 2.0 * std::expm1(2.25);
  CHECK(reverse_young_exp({4, 1, 0.5}) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(reverse_young_exp({4, 1, 0.5}) ==
        doctest::Approx(16.97548).epsilon(1e-6));
  CHECK(reverse_young_exp({4, 1, 0.5}) > cf_sandwich_two({4, 1, 0.5}).upper);
  CHECK_THROWS_AS(reverse_young_exp({1000, 0.001, 0.5}), OverflowError);

  CHECK(reverse_young_log({3, 3, 0.9}) == 0.0);
  const double l4 = std::log(4.0);
  CHECK(reverse_young_log({4, 1, 0.5}) ==
        doctest::Approx(l4 * l4).epsilon(1e-14));
  CHECK(reverse_young_log({4, 1, 0.5}) == doctest::Approx(1.92181).epsilon(1e-5));
  const double l2 = std::log(2.0);
  CHECK(reverse_young_log({0.5, 0.25, 0.5}) ==
        doctest::Approx(0.125 * l2 * l2).epsilon(1e-14));
  CHECK(reverse_young_log({0.5, 0.25, 0.5}) ==
        doctest::Approx(0.06006).epsilon(1e-4));
}

TEST_CASE("bernoulli sandwich") {
  for (auto [x, lam] : {std::pair{0.0, 0.7}, {3.0, 1.0}, {3.0, 0.0}}) {
    const ScalarSandwich z = bernoulli_sandwich(x, lam);
    CHECK(z.lower == 0.0);
    CHECK(z.middle == 0.0);
    CHECK(z.upper == 0.0);
  }
  // t = x+1 carries the pair case over: x=3, lambda=1/2 is the (4,1) sandwich
  check_close(bernoulli_sandwich(3, 0.5), cf_sandwich_two({4, 1, 0.5}), 1e-14);
  CHECK_THROWS_AS(bernoulli_sandwich(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(bernoulli_sandwich(-1.5, 0.5), DomainError);
  CHECK_THROWS_AS(bernoulli_sandwich(1.0, 1.5), DomainError);

  // negative x side: m = x+1 < 1
  const ScalarSandwich s = bernoulli_sandwich(-0.5, 0.3);
  CHECK(s.pass());
  CHECK(s.lower == doctest::Approx(0.3 * 0.7 * 0.25 / 2.0).epsilon(1e-14));
  CHECK(s.upper == doctest::Approx(0.3 * 0.7 * 0.25 / 1.0).epsilon(1e-14));
}

TEST_CASE("tightness report") {
  const TightnessReport tie = tightness_report({9, 9, 0.4});
  CHECK(tie.ordering == "tie");
  CHECK(tie.cf_upper == 0.0);

  const TightnessReport r = tightness_report({0.5, 0.25, 0.5});
  CHECK(r.cf_upper == 0.03125);  // dyadic
  CHECK(r.log_upper == doctest::Approx(0.06006).epsilon(1e-4));
  CHECK(r.cf_upper < r.log_upper);
  CHECK(r.log_upper < r.exp_upper);
  CHECK(r.ordering == "cf<log<exp");
  CHECK_FALSE(r.exp_overflow);

  // both a, b below 1, yet the quadratic upper bound is looser than the
  // logarithmic one; the regime claim is not universal
  const TightnessReport ce = tightness_report({0.99, 0.0001, 0.5});
  CHECK(ce.cf_upper == doctest::Approx(1224.8775).epsilon(1e-6));
  CHECK(ce.log_upper == doctest::Approx(20.9498).epsilon(1e-4));
  CHECK(ce.cf_upper > ce.log_upper);
  CHECK(ce.exp_overflow);
  CHECK(std::isinf(ce.exp_upper));
  CHECK(ce.ordering == "log<cf<exp");
}

TEST_CASE("scale covariance of the pair sandwich") {
  const ScalarSandwich base = cf_sandwich_two({4, 1, 0.3});
  const ScalarSandwich doubled = cf_sandwich_two({8, 2, 0.3});
  CHECK(doubled.lower == 2.0 * base.lower);  // exact for power-of-two scaling
  CHECK(doubled.middle == 2.0 * base.middle);
  CHECK(doubled.upper == 2.0 * base.upper);

  const double c = 3.7;
  const ScalarSandwich scaled = cf_sandwich_two({4 * c, 1 * c, 0.3});
  CHECK(scaled.lower == doctest::Approx(c * base.lower).epsilon(1e-14));
  CHECK(scaled.middle == doctest::Approx(c * base.middle).epsilon(1e-13));
  CHECK(scaled.upper == doctest::Approx(c * base.upper).epsilon(1e-14));
}

TEST_CASE("containment and nonnegativity on random draws") {
  Rng rng(314159);
  for (int t = 0; t < 2000; ++t) {
    const ScalarPair pair{rng.log_uniform(1e-3, 1e3),
                          rng.log_uniform(1e-3, 1e3), rng.next_unit()};
    const ScalarSandwich s = cf_sandwich_two(pair);
    CAPTURE(pair.a);
    CAPTURE(pair.b);
    CAPTURE(pair.lambda);
    CHECK(s.pass());
    CHECK(young_gap(pair) >= -default_tolerance()(pair.max()));
    if (pair.a != pair.b && pair.lambda > 0 && pair.lambda < 1) {
      const TightnessReport rep = tightness_report(pair);
      CHECK(rep.cf_upper < rep.exp_upper);
    }
  }
}

TEST_CASE("pair sandwich agrees with the 256-bit oracle") {
  Rng rng(2718);
  for (int t = 0; t < 200; ++t) {
    const double a = rng.log_uniform(1e-3, 1e3);
    const double b = rng.log_uniform(1e-3, 1e3);
    const double lam = rng.next_unit();
    check_close(cf_sandwich_two({a, b, lam}), oracle::hp_cf_two(a, b, lam),
                1e-12);
  }
}
