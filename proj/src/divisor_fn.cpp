#include "cfineq/divisor_fn.hpp"

#include <algorithm>
#include <cmath>

#include "cfineq/errors.hpp"
#include "cfineq/kernels.hpp"
#include "cfineq/scalar_cf.hpp"

namespace cfineq {
namespace {

using u128 = unsigned __int128;

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  hi <<= 64;
  return hi + mpz_class(static_cast<unsigned long>(v & ~0ULL));
}

mpz_class mpz_pow_u64(uint64_t base, unsigned exp) {
  mpz_class b(static_cast<unsigned long>(base));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::vector<uint64_t> divisors_from_factors(const std::vector<Factor>& fs) {
  std::vector<uint64_t> divs{1};
  for (const Factor& f : fs) {
    const std::size_t base = divs.size();
    uint64_t pk = 1;
    for (uint32_t j = 0; j < f.exponent; ++j) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<uint64_t> unitary_from_factors(const std::vector<Factor>& fs) {
  std::vector<uint64_t> divs{1};
  for (const Factor& f : fs) {
    uint64_t pe = 1;
    for (uint32_t j = 0; j < f.exponent; ++j) pe *= f.prime;
    const std::size_t base = divs.size();
    for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Sum of d^k over the list, exact. Stays in 128-bit arithmetic while
// tau * max_d^k provably fits, drops to mpz otherwise.
mpz_class sum_powers(const std::vector<uint64_t>& divs, unsigned k) {
  if (k == 0) return mpz_class(static_cast<unsigned long>(divs.size()));
  const uint64_t dmax = divs.back();
  const double bits =
      k * std::log2(static_cast<double>(dmax) + 1.0) + std::log2(divs.size() + 1.0);
  if (bits < 120.0) {
    u128 acc = 0;
    for (uint64_t d : divs) {
      u128 term = 1;
      for (unsigned j = 0; j < k; ++j) term *= d;
      acc += term;
    }
    return mpz_from_u128(acc);
  }
  mpz_class acc = 0;
  for (uint64_t d : divs) acc += mpz_pow_u64(d, k);
  return acc;
}

bool integral_exponent(double k) {
  return k >= 0 && k == std::rint(k) && k <= 1e6;
}

}  // namespace

const char* to_string(DivisorVariant v) {
  return v == DivisorVariant::proof_corrected ? "proof-corrected" : "as-printed";
}

const char* to_string(BigMChoice c) {
  return c == BigMChoice::n_to_k ? "n-to-k" : "n-as-printed";
}

std::vector<Factor> factorize(uint64_t n) {
  if (n == 0) throw DomainError("n must be positive");
  std::vector<Factor> fs;
  auto strip = [&](uint64_t p) {
    if (n % p) return;
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fs.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  // 2-3-5 wheel: candidate steps cycling through the 8 residues coprime to 30
  static constexpr uint64_t steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  uint64_t p = 7;
  int idx = 0;
  while (p <= n / p) {
    strip(p);
    p += steps[idx];
    idx = (idx + 1) & 7;
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

std::vector<uint64_t> divisors(uint64_t n, bool unitary) {
  const auto fs = factorize(n);
  return unitary ? unitary_from_factors(fs) : divisors_from_factors(fs);
}

DivisorProfile divisor_profile(uint64_t n) {
  DivisorProfile prof;
  prof.n = n;
  prof.factorization = factorize(n);
  prof.divisors = divisors_from_factors(prof.factorization);
  prof.unitary_divisors = unitary_from_factors(prof.factorization);
  return prof;
}

mpz_class sigma_exact(uint64_t n, unsigned k, bool unitary) {
  return sum_powers(divisors(n, unitary), k);
}

mpz_class sigma_multiplicative(uint64_t n, unsigned k, bool unitary) {
  const auto fs = factorize(n);
  mpz_class acc = 1;
  for (const Factor& f : fs) {
    if (unitary) {
      acc *= 1 + mpz_pow_u64(f.prime, k * f.exponent);
    } else if (k == 0) {
      acc *= f.exponent + 1;
    } else {
      const mpz_class pk = mpz_pow_u64(f.prime, k);
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), pk.get_mpz_t(), f.exponent + 1);
      acc *= (num - 1) / (pk - 1);
    }
  }
  return acc;
}

double divisor_function(uint64_t n, double k, bool unitary) {
  if (n == 0) throw DomainError("n must be positive");
  if (!(k >= 0)) throw DomainError("k must be nonnegative");
  if (integral_exponent(k))
    return sigma_exact(n, static_cast<unsigned>(k), unitary).get_d();
  const auto divs = divisors(n, unitary);
  std::vector<double> powed(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i)
    powed[i] = exp_log_pow(static_cast<double>(divs[i]), k);
  return kern::sum(powed);
}

DivisorSandwichReport divisor_mean_sandwich(uint64_t n, double k, bool unitary,
                                            DivisorVariant variant,
                                            BigMChoice big_m,
                                            const Tolerance& tol) {
  if (n == 0) throw DomainError("n must be positive");
  return divisor_mean_sandwich(divisor_profile(n), k, unitary, variant, big_m,
                               tol);
}

DivisorSandwichReport divisor_mean_sandwich(const DivisorProfile& prof,
                                            double k, bool unitary,
                                            DivisorVariant variant,
                                            BigMChoice big_m,
                                            const Tolerance& tol) {
  if (!(k >= 0) || !std::isfinite(k)) throw DomainError("k must be nonnegative");
  DivisorSandwichReport rep;
  rep.n = prof.n;
  rep.k = k;
  rep.unitary = unitary;
  rep.variant = variant;
  rep.big_m = big_m;
  const auto& divs = unitary ? prof.unitary_divisors : prof.divisors;
  const unsigned long tau = divs.size();

  if (integral_exponent(k)) {
    const unsigned ku = static_cast<unsigned>(k);
    const mpz_class sk = sum_powers(divs, ku);
    const mpz_class s2k = sum_powers(divs, 2 * ku);
    const mpz_class nk = mpz_pow_u64(prof.n, ku);
    mpq_class mean(sk, tau);
    mean.canonicalize();
    mpq_class bracket;
    if (variant == DivisorVariant::proof_corrected) {
      mpq_class sk2_over_tau(sk * sk, tau);
      sk2_over_tau.canonicalize();
      bracket = mpq_class(s2k) - sk2_over_tau;
    } else {
      bracket = mpq_class(s2k) - mean * mean;
    }
    const mpz_class big_m_den =
        big_m == BigMChoice::n_to_k
            ? nk
            : mpz_class(static_cast<unsigned long>(prof.n));
    mpq_class lower = bracket / (2 * mpq_class(big_m_den) * tau);
    mpq_class upper = bracket / (2 * tau);

    // middle = mean - sqrt(n^k); compare through squares, exactly:
    //   lower <= middle  <=>  Q := mean - lower >= sqrt(n^k)
    //   middle <= upper  <=>  R := mean - upper <= sqrt(n^k)
    const mpq_class Q = mean - lower;
    const mpq_class R = mean - upper;
    const mpq_class nk_q(nk);
    rep.exact = true;
    ScalarSandwich& s = rep.sandwich;
    s.lower = lower.get_d();
    s.upper = upper.get_d();
    s.middle = mean.get_d() - std::sqrt(nk.get_d());
    if (ku == 0) s.middle = 0.0;  // mean = 1, sqrt(n^0) = 1
    s.slack_lower = s.middle - s.lower;
    s.slack_upper = s.upper - s.middle;
    s.lower_ok = Q >= 0 && Q * Q >= nk_q;
    s.upper_ok = R <= 0 || R * R <= nk_q;
    rep.lower_exact = lower.get_str();
    rep.upper_exact = upper.get_str();
    return rep;
  }

  // Non-integer k: compensated floating-point over the divisor list.
  std::vector<double> dk(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i)
    dk[i] = exp_log_pow(static_cast<double>(divs[i]), k);
  const double sk = kern::sum(dk);
  for (double& v : dk) v *= v;
  const double s2k = kern::sum(dk);
  const double taud = static_cast<double>(tau);
  const double mean = sk / taud;
  const double nd = static_cast<double>(prof.n);
  const double nk = exp_log_pow(nd, k);
  const double middle = mean - exp_log_pow(nd, 0.5 * k);
  const double bracket = variant == DivisorVariant::proof_corrected
                             ? s2k - sk * sk / taud
                             : s2k - mean * mean;
  const double lo_den =
      2.0 * (big_m == BigMChoice::n_to_k ? nk : nd) * taud;
  rep.sandwich =
      ScalarSandwich::of(bracket / lo_den, middle, bracket / (2.0 * taud), tol);
  rep.exact = false;
  return rep;
}

}  // namespace cfineq
