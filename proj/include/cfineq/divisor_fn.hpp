#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cfineq/sandwich.hpp"
#include "cfineq/tolerance.hpp"

namespace cfineq {

struct Factor {
  uint64_t prime;
  uint32_t exponent;
};

/// Trial division with a 2-3-5 wheel; primes ascending, empty for n = 1.
std::vector<Factor> factorize(uint64_t n);

/// Sorted divisors of n; with unitary=true only those d with gcd(d, n/d) = 1.
std::vector<uint64_t> divisors(uint64_t n, bool unitary);

struct DivisorProfile {
  uint64_t n = 1;
  std::vector<Factor> factorization;
  std::vector<uint64_t> divisors;          // all divisors, ascending
  std::vector<uint64_t> unitary_divisors;  // gcd(d, n/d) = 1 subset
};

DivisorProfile divisor_profile(uint64_t n);

/// sigma_k(n) (or sigma*_k) by summing d^k over the divisor list, exact.
mpz_class sigma_exact(uint64_t n, unsigned k, bool unitary);

/// Closed form: prod (p^(k(e+1)) - 1)/(p^k - 1), resp. prod (1 + p^(k e)).
/// Independent route from sigma_exact; the two are cross-checked exactly.
mpz_class sigma_multiplicative(uint64_t n, unsigned k, bool unitary);

/// sum d^k over (unitary) divisors as a double; exact big-integer arithmetic
/// for integer k, compensated floating-point summation otherwise.
double divisor_function(uint64_t n, double k, bool unitary);

/// Which bracket the sandwich uses: the one the variance identity produces
/// (sigma_2k - sigma_k^2/tau) or the published display (sigma_2k - (sigma_k/tau)^2).
enum class DivisorVariant { proof_corrected, as_printed };

/// Denominator of the lower bound: 2*n^k*tau (the substitution x_i = d_i^k
/// forces max = n^k) or the published 2*n*tau.
enum class BigMChoice { n_to_k, n_as_printed };

const char* to_string(DivisorVariant v);
const char* to_string(BigMChoice c);

struct DivisorSandwichReport {
  uint64_t n = 1;
  double k = 0.0;
  bool unitary = false;
  DivisorVariant variant = DivisorVariant::proof_corrected;
  BigMChoice big_m = BigMChoice::n_to_k;
  ScalarSandwich sandwich;
  bool exact = false;        // integer k: flags decided in rational arithmetic
  std::string lower_exact;   // canonical rational, integer-k path only
  std::string upper_exact;
};

/// Sandwich for sigma_k/tau - sqrt(n^k) (or the unitary analogue). The
/// proof_corrected variant is provably contained; as_printed is retained
/// because it can fail (n=6, k=1 gives lower 41/48 > middle 3 - sqrt 6).
DivisorSandwichReport divisor_mean_sandwich(
    uint64_t n, double k, bool unitary,
    DivisorVariant variant = DivisorVariant::proof_corrected,
    BigMChoice big_m = BigMChoice::n_to_k,
    const Tolerance& tol = default_tolerance());

/// Same, reusing an already computed profile (for range scans).
DivisorSandwichReport divisor_mean_sandwich(
    const DivisorProfile& profile, double k, bool unitary,
    DivisorVariant variant = DivisorVariant::proof_corrected,
    BigMChoice big_m = BigMChoice::n_to_k,
    const Tolerance& tol = default_tolerance());

}  // namespace cfineq
