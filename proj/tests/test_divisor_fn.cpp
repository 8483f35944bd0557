#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "cfineq/divisor_fn.hpp"
#include "cfineq/errors.hpp"
#include "cfineq/oracle.hpp"
#include "cfineq/rng.hpp"

using namespace cfineq;

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  const auto f12 = factorize(12);
  REQUIRE(f12.size() == 2);
  CHECK(f12[0].prime == 2);
  CHECK(f12[0].exponent == 2);
  CHECK(f12[1].prime == 3);
  CHECK(f12[1].exponent == 1);
  const auto f97 = factorize(97);
  REQUIRE(f97.size() == 1);
  CHECK(f97[0].prime == 97);
  CHECK(f97[0].exponent == 1);
  CHECK_THROWS_AS(factorize(0), DomainError);

  // 2^63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657
  const auto big = factorize((1ULL << 63) - 1);
  uint64_t recon = 1;
  for (const Factor& f : big)
    for (uint32_t e = 0; e < f.exponent; ++e) recon *= f.prime;
  CHECK(recon == (1ULL << 63) - 1);
  CHECK(big.front().prime == 7);
  CHECK(big.front().exponent == 2);
}

TEST_CASE("divisor lists") {
  CHECK(divisors(6, false) == std::vector<uint64_t>{1, 2, 3, 6});
  CHECK(divisors(12, true) == std::vector<uint64_t>{1, 3, 4, 12});
  CHECK(divisors(1, false) == std::vector<uint64_t>{1});
  CHECK(divisors(1, true) == std::vector<uint64_t>{1});
  CHECK(divisors(97, false) == std::vector<uint64_t>{1, 97});
  CHECK_THROWS_AS(divisors(0, false), DomainError);
}

TEST_CASE("divisor profile invariants at n = 360") {
  const DivisorProfile prof = divisor_profile(360);  // 2^3 * 3^2 * 5
  CHECK(prof.divisors.size() == 24);
  CHECK(prof.unitary_divisors.size() == 8);
  uint64_t recon = 1;
  for (const Factor& f : prof.factorization)
    for (uint32_t e = 0; e < f.exponent; ++e) recon *= f.prime;
  CHECK(recon == 360);
  CHECK(prof.divisors.front() == 1);
  CHECK(prof.divisors.back() == 360);
  for (uint64_t d : prof.unitary_divisors) CHECK(std::gcd(d, 360 / d) == 1);
}

TEST_CASE("divisor_function worked values") {
  CHECK(divisor_function(6, 1, false) == 12.0);
  CHECK(divisor_function(6, 0, false) == 4.0);
  CHECK(divisor_function(12, 1, true) == 20.0);  // 1 + 3 + 4 + 12
  CHECK(divisor_function(12, 0, true) == 4.0);   // 2^omega(12)
  CHECK(divisor_function(1, 3, false) == 1.0);
  CHECK(divisor_function(1, 0.5, true) == 1.0);
  CHECK_THROWS_AS(divisor_function(0, 1, false), DomainError);
  CHECK_THROWS_AS(divisor_function(6, -1, false), DomainError);

  // non-integer k against direct evaluation
  double want = 0.0;
  for (uint64_t d : {1, 2, 3, 6}) want += std::sqrt(static_cast<double>(d));
  CHECK(divisor_function(6, 0.5, false) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("enumeration and closed form agree exactly") {
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const uint64_t n = 1 + rng.uniform_index(50000);
    for (bool unitary : {false, true})
      for (unsigned k : {0u, 1u, 2u, 3u, 5u})
        CHECK(sigma_exact(n, k, unitary) == sigma_multiplicative(n, k, unitary));
  }
  // sigma_6 overflows 64-bit arithmetic well before n = 1e5
  CHECK(sigma_exact(99991, 6, false) == sigma_multiplicative(99991, 6, false));
}

TEST_CASE("divisor mean sandwich, corrected variant") {
  const DivisorSandwichReport one = divisor_mean_sandwich(1, 4, false);
  CHECK(one.sandwich.lower == 0.0);
  CHECK(one.sandwich.middle == 0.0);
  CHECK(one.sandwich.upper == 0.0);
  CHECK(one.sandwich.pass());

  const DivisorSandwichReport rep = divisor_mean_sandwich(6, 1, false);
  CHECK(rep.exact);
  CHECK(rep.lower_exact == "7/24");  // 14/48 reduced
  CHECK(rep.upper_exact == "7/4");
  CHECK(rep.sandwich.lower == doctest::Approx(14.0 / 48).epsilon(1e-15));
  CHECK(rep.sandwich.middle ==
        doctest::Approx(3.0 - std::sqrt(6.0)).epsilon(1e-15));
  CHECK(rep.sandwich.upper == 1.75);
  CHECK(rep.sandwich.pass());

  const DivisorSandwichReport zero = divisor_mean_sandwich(6, 0, false);
  CHECK(zero.sandwich.lower == 0.0);
  CHECK(zero.sandwich.middle == 0.0);
  CHECK(zero.sandwich.upper == 0.0);
  CHECK(zero.sandwich.pass());

  Rng rng(20);
  for (int t = 0; t < 100; ++t) {
    const uint64_t n = 1 + rng.uniform_index(20000);
    for (bool unitary : {false, true})
      for (double k : {0.0, 1.0, 2.0, 3.0}) {
        const DivisorSandwichReport r = divisor_mean_sandwich(n, k, unitary);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(r.exact);
        CHECK(r.sandwich.pass());
      }
  }
}

TEST_CASE("divisor mean sandwich, as-printed variant fails at n=6, k=1") {
  const DivisorSandwichReport rep = divisor_mean_sandwich(
      6, 1, false, DivisorVariant::as_printed, BigMChoice::n_as_printed);
  CHECK(rep.exact);
  CHECK(rep.lower_exact == "41/48");
  CHECK_FALSE(rep.sandwich.lower_ok);
  CHECK(rep.sandwich.upper_ok);
  CHECK(rep.sandwich.lower == doctest::Approx(41.0 / 48).epsilon(1e-15));
}

TEST_CASE("bracket and denominator options act independently") {
  // k = 2 separates n^k from n in the lower denominator
  const DivisorSandwichReport tok = divisor_mean_sandwich(
      6, 2, false, DivisorVariant::proof_corrected, BigMChoice::n_to_k);
  const DivisorSandwichReport printedm = divisor_mean_sandwich(
      6, 2, false, DivisorVariant::proof_corrected, BigMChoice::n_as_printed);
  // bracket = sigma_4 - sigma_2^2/tau = 1394 - 625 = 769
  CHECK(tok.lower_exact == "769/288");      // 769 / (2 * 36 * 4)
  CHECK(printedm.lower_exact == "769/48");  // 769 / (2 * 6 * 4)
  CHECK(tok.sandwich.pass());
}

TEST_CASE("non-integer k takes the floating path and matches the oracle") {
  for (uint64_t n : {2ULL, 6ULL, 12ULL, 97ULL, 360ULL, 9973ULL}) {
    for (bool unitary : {false, true}) {
      const DivisorSandwichReport rep = divisor_mean_sandwich(n, 0.5, unitary);
      CHECK_FALSE(rep.exact);
      CHECK(rep.sandwich.pass());
      const ScalarSandwich want = oracle::hp_divisor_mean(
          n, 0.5, unitary, DivisorVariant::proof_corrected, BigMChoice::n_to_k);
      CHECK(rep.sandwich.lower == doctest::Approx(want.lower).epsilon(1e-12));
      CHECK(rep.sandwich.middle == doctest::Approx(want.middle).epsilon(1e-12));
      CHECK(rep.sandwich.upper == doctest::Approx(want.upper).epsilon(1e-12));
    }
  }
}

TEST_CASE("divisor enumeration agrees with the brute oracle") {
  Rng rng(31337);
  for (int t = 0; t < 100; ++t) {
    const uint64_t n = 1 + rng.uniform_index(100000);
    CHECK(divisors(n, false) == oracle::brute_divisors(n));
  }
}
