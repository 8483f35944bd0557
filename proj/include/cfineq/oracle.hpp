#pragma once

#include <mpfr.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfineq/divisor_fn.hpp"
#include "cfineq/sandwich.hpp"
#include "cfineq/tolerance.hpp"

namespace cfineq::oracle {

inline constexpr int kDefaultBits = 256;

/// Arbitrary-precision real backed by MPFR. Every operation is correctly
/// rounded at the instance precision, which dwarfs every tolerance in the
/// library at the default 256 bits.
class Real {
 public:
  explicit Real(int bits = kDefaultBits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(double d, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static Real from_u64(uint64_t n, int bits) {
    Real r(bits);
    mpfr_set_ui(r.v_, n, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
  friend Real exp(const Real& a) { return un(mpfr_exp, a); }
  friend Real expm1(const Real& a) { return un(mpfr_expm1, a); }
  friend Real log(const Real& a) { return un(mpfr_log, a); }
  friend Real log1p(const Real& a) { return un(mpfr_log1p, a); }
  friend Real abs(const Real& a) { return un(mpfr_abs, a); }
  friend Real pow(const Real& a, const Real& b) { return bin(mpfr_pow, a, b); }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

 private:
  using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  static Real un(Unary f, const Real& a) {
    Real r(a.precision());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  static Real bin(Binary f, const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// High-precision re-evaluations of every sandwich expression, used to stamp
// fixtures and to adjudicate tight comparisons. These recompute the formulas
// from the inputs; they share no code with the fast paths they check.

ScalarSandwich hp_cf_two(double a, double b, double lambda,
                         int bits = kDefaultBits,
                         const Tolerance& tol = default_tolerance());
ScalarSandwich hp_cf_n(std::span<const double> points,
                       std::span<const double> weights, int bits = kDefaultBits,
                       const Tolerance& tol = default_tolerance());
ScalarSandwich hp_bernoulli(double x, double lambda, int bits = kDefaultBits,
                            const Tolerance& tol = default_tolerance());
ScalarSandwich hp_power_mean(std::span<const double> values,
                             std::span<const double> weights, double r, double s,
                             int bits = kDefaultBits,
                             const Tolerance& tol = default_tolerance());
ScalarSandwich hp_holder(std::span<const double> avec,
                         std::span<const double> bvec, double p, double q,
                         int bits = kDefaultBits,
                         const Tolerance& tol = default_tolerance());
ScalarSandwich hp_cauchy(std::span<const double> avec,
                         std::span<const double> bvec, int bits = kDefaultBits,
                         const Tolerance& tol = default_tolerance());
ScalarSandwich hp_bergstrom(std::span<const double> xvec,
                            std::span<const double> avec, int bits = kDefaultBits,
                            const Tolerance& tol = default_tolerance());
ScalarSandwich hp_divisor_mean(uint64_t n, double k, bool unitary,
                               DivisorVariant variant, BigMChoice big_m,
                               int bits = kDefaultBits,
                               const Tolerance& tol = default_tolerance());

double hp_young_gap(double a, double b, double lambda, int bits = kDefaultBits);
/// The three upper bounds of the tightness comparison; exp may convert to
/// +inf even though the 256-bit value is finite.
struct HpTightness {
  double cf_upper;
  double exp_upper;
  double log_upper;
};
HpTightness hp_tightness(double a, double b, double lambda,
                         int bits = kDefaultBits);

double hp_power_mean_value(std::span<const double> values,
                           std::span<const double> weights, double r,
                           int bits = kDefaultBits);

/// Exact-to-precision reductions for kernel equivalence tests.
double hp_sum(std::span<const double> x, int bits = kDefaultBits);
double hp_dot(std::span<const double> x, std::span<const double> y,
              int bits = kDefaultBits);

/// Divisors of n by bare trial division over 1..sqrt(n) with paired
/// complements; the oracle for the factorization-based enumeration.
std::vector<uint64_t> brute_divisors(uint64_t n);

enum class Kind {
  cf_two,
  cf_n,
  bernoulli,
  power_mean,
  holder,
  cauchy,
  bergstrom,
  divisor_mean,
};

const char* to_string(Kind k);

struct Request {
  Kind kind = Kind::cf_two;
  double a = 0, b = 0, lambda = 0, x = 0, r = 0, s = 0, p = 0, q = 0, k = 0;
  uint64_t n = 0;
  bool unitary = false;
  DivisorVariant variant = DivisorVariant::proof_corrected;
  BigMChoice big_m = BigMChoice::n_to_k;
  std::vector<double> xs;
  std::vector<double> ws;
};

ScalarSandwich hp_sandwich(const Request& req, int bits = kDefaultBits,
                           const Tolerance& tol = default_tolerance());

struct Fixture {
  Request request;
  ScalarSandwich sandwich;
  int precision_bits = kDefaultBits;
};

/// The worked examples of every sandwich kind, evaluated at `bits`.
std::vector<Fixture> builtin_fixtures(int bits = kDefaultBits);

/// JSON record {kind, inputs, lower, middle, upper, precision_bits}.
std::string fixture_json(const Fixture& f);

}  // namespace cfineq::oracle
