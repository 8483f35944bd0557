#include "cfineq/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "cfineq/divisor_fn.hpp"
#include "cfineq/errors.hpp"
#include "cfineq/kernels.hpp"
#include "cfineq/operator_ineq.hpp"
#include "cfineq/oracle.hpp"
#include "cfineq/report.hpp"
#include "cfineq/scalar_cf.hpp"
#include "cfineq/sum_refine.hpp"

namespace cfineq {
namespace {

class SuiteRun {
 public:
  explicit SuiteRun(std::string name)
      : start_(std::chrono::steady_clock::now()) {
    res_.suite = std::move(name);
  }

  void check(bool ok, const std::string& detail) {
    ++res_.checks;
    if (ok) return;
    ++res_.failures;
    if (res_.failure_details.size() < 10) res_.failure_details.push_back(detail);
  }

  SuiteResult take() {
    res_.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    return std::move(res_);
  }

 private:
  SuiteResult res_;
  std::chrono::steady_clock::time_point start_;
};

bool rel_close(double got, double want, double eps) {
  if (want == 0.0) return got == 0.0;
  return std::abs(got - want) <= eps * std::max(1.0, std::abs(want));
}

bool sandwich_close(const ScalarSandwich& got, const ScalarSandwich& want,
                    double eps) {
  return rel_close(got.lower, want.lower, eps) &&
         rel_close(got.middle, want.middle, eps) &&
         rel_close(got.upper, want.upper, eps);
}

std::string describe(const ScalarSandwich& s) {
  return "(" + fmt_double(s.lower) + ", " + fmt_double(s.middle) + ", " +
         fmt_double(s.upper) + ")";
}

WeightedSample draw_sample(Rng& rng, std::size_t max_n) {
  WeightedSample ws;
  const std::size_t n = 1 + rng.uniform_index(max_n);
  ws.points.resize(n);
  ws.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ws.points[i] = rng.log_uniform(1e-3, 1e3);
    ws.weights[i] = rng.uniform(1e-6, 1.0);
  }
  const double s = kern::sum(ws.weights);
  for (double& w : ws.weights) w /= s;
  return ws;
}

}  // namespace

SymMatrix random_symmetric(Rng& rng, int dim, double scale) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      m.set(i, j, scale * (2.0 * rng.next_unit() - 1.0));
  return m;
}

SymMatrix random_spd(Rng& rng, int dim, double eig_lo, double eig_hi) {
  const EigenDecomposition basis = jacobi_eigh(random_symmetric(rng, dim, 1.0));
  std::vector<double> eigs(dim);
  for (double& e : eigs) e = rng.log_uniform(eig_lo, eig_hi);
  return rebuild(basis, eigs);
}

std::pair<SymMatrix, SymMatrix> random_comparable_pair(Rng& rng, int dim) {
  SymMatrix a = random_spd(rng, dim, 0.1, 10.0);
  const SymMatrix c = random_spd(rng, dim, 1e-3, 10.0);
  return {a, a + c};
}

SuiteResult run_scalar_suite(const SuiteConfig& cfg) {
  SuiteRun run("scalar");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    ScalarPair pair{rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3),
                    rng.next_unit()};
    const ScalarSandwich two = cf_sandwich_two(pair, cfg.tol);
    run.check(two.pass(), "two-variable containment at a=" + fmt_double(pair.a) +
                              " b=" + fmt_double(pair.b) +
                              " lambda=" + fmt_double(pair.lambda) + " -> " +
                              describe(two));
    const double gap = young_gap(pair);
    run.check(gap >= -cfg.tol(pair.max()),
              "negative gap at a=" + fmt_double(pair.a) +
                  " b=" + fmt_double(pair.b) +
                  " lambda=" + fmt_double(pair.lambda));
    const double rlog = reverse_young_log(pair);
    run.check(rlog >= gap - cfg.tol(std::abs(rlog) + std::abs(gap)),
              "log reverse bound below the gap at a=" + fmt_double(pair.a) +
                  " b=" + fmt_double(pair.b));
    try {
      const double rexp = reverse_young_exp(pair);
      run.check(rexp >= gap - cfg.tol(std::abs(rexp) + std::abs(gap)),
                "exp reverse bound below the gap at a=" + fmt_double(pair.a) +
                    " b=" + fmt_double(pair.b));
    } catch (const OverflowError&) {
      run.check(true, "");  // vacuous bound counts as containing the gap
    }

    const WeightedSample ws = draw_sample(rng, 64);
    const ScalarSandwich nv = cf_sandwich_n(ws, cfg.tol);
    run.check(nv.pass(), "n-variable containment at n=" +
                             std::to_string(ws.points.size()) + " -> " +
                             describe(nv));

    const double x = rng.log_uniform(1e-3, 1e3) - 1.0;
    const double lam = rng.next_unit();
    const ScalarSandwich bern = bernoulli_sandwich(x, lam, cfg.tol);
    run.check(bern.pass(), "Bernoulli containment at x=" + fmt_double(x) +
                               " lambda=" + fmt_double(lam) + " -> " +
                               describe(bern));
  }
  return run.take();
}

SuiteResult run_fixture_suite(const SuiteConfig& cfg) {
  SuiteRun run("fixtures");
  const int bits = cfg.precision_bits;

  const ScalarSandwich hp2 = oracle::hp_cf_two(4, 1, 0.5, bits);
  run.check(hp2.lower == 0.28125 && hp2.middle == 0.5 && hp2.upper == 1.125,
            "oracle cf_two(4,1,0.5) != (0.28125, 0.5, 1.125): " + describe(hp2));
  const ScalarSandwich fast2 = cf_sandwich_two({4, 1, 0.5}, cfg.tol);
  run.check(sandwich_close(fast2, hp2, 1e-12),
            "cf_two(4,1,0.5) vs oracle: " + describe(fast2));

  {
    PowerMeanSpec spec{{1, 2}, {1, 1}, 1, 2};
    const ScalarSandwich got = power_mean_sandwich(spec, cfg.tol).sandwich;
    const ScalarSandwich want =
        oracle::hp_power_mean(spec.values, spec.weights, 1, 2, bits);
    run.check(sandwich_close(got, want, 1e-12),
              "power_mean fixture: " + describe(got) + " vs " + describe(want));
  }
  {
    HolderSpec spec{{1, 2}, {2, 1}, 2, 2};
    const ScalarSandwich got = holder_sandwich(spec, cfg.tol).sandwich;
    const ScalarSandwich want =
        oracle::hp_holder(spec.avec, spec.bvec, 2, 2, bits);
    run.check(want.lower == 0.5625 && want.middle == 1.0 && want.upper == 2.25,
              "oracle holder fixture: " + describe(want));
    run.check(sandwich_close(got, want, 1e-12),
              "holder fixture: " + describe(got));
  }
  {
    const std::vector<double> a{1, 2}, b{2, 1};
    const ScalarSandwich got = cauchy_sandwich(a, b, cfg.tol).sandwich;
    const ScalarSandwich want = oracle::hp_cauchy(a, b, bits);
    run.check(want.lower == 4.81640625 && want.middle == 9.0 &&
                  want.upper == 23.0625,
              "oracle cauchy fixture: " + describe(want));
    run.check(sandwich_close(got, want, 1e-12),
              "cauchy fixture: " + describe(got));
  }
  {
    const std::vector<double> x{1, 2}, a{1, 1};
    const ScalarSandwich got = bergstrom_sandwich(x, a, cfg.tol).sandwich;
    const ScalarSandwich want = oracle::hp_bergstrom(x, a, bits);
    run.check(sandwich_close(got, want, 1e-12),
              "bergstrom fixture: " + describe(got) + " vs " + describe(want));
  }
  {
    WeightedSample ws{{1, 4}, {0.5, 0.5}};
    const ScalarSandwich got = cf_sandwich_n(ws, cfg.tol);
    run.check(sandwich_close(got, fast2, 1e-12),
              "cf_n(1,4;0.5,0.5) != cf_two(4,1,0.5): " + describe(got));
    WeightedSample ws3{{1, 2, 4}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
    const ScalarSandwich got3 = cf_sandwich_n(ws3, cfg.tol);
    const ScalarSandwich want3 = oracle::hp_cf_n(ws3.points, ws3.weights, bits);
    run.check(sandwich_close(got3, want3, 1e-12),
              "cf_n(1,2,4) fixture: " + describe(got3));
  }
  {
    const ScalarSandwich got = bernoulli_sandwich(3, 0.5, cfg.tol);
    const ScalarSandwich want = oracle::hp_bernoulli(3, 0.5, bits);
    run.check(want.lower == 0.28125 && want.middle == 0.5 && want.upper == 1.125,
              "oracle bernoulli fixture: " + describe(want));
    run.check(sandwich_close(got, want, 1e-12),
              "bernoulli fixture: " + describe(got));
  }
  {
    const DivisorSandwichReport rep = divisor_mean_sandwich(
        6, 1, false, DivisorVariant::proof_corrected, BigMChoice::n_to_k,
        cfg.tol);
    run.check(rep.exact && rep.lower_exact == "7/24" &&
                  rep.upper_exact == "7/4" && rep.sandwich.pass(),
              "proof-corrected (6,1): lower=" + rep.lower_exact +
                  " upper=" + rep.upper_exact);
    const ScalarSandwich want = oracle::hp_divisor_mean(
        6, 1, false, DivisorVariant::proof_corrected, BigMChoice::n_to_k, bits);
    run.check(sandwich_close(rep.sandwich, want, 1e-12),
              "proof-corrected (6,1) vs oracle: " + describe(rep.sandwich));
  }
  {
    const DivisorSandwichReport rep = divisor_mean_sandwich(
        6, 1, false, DivisorVariant::as_printed, BigMChoice::n_as_printed,
        cfg.tol);
    run.check(rep.exact && rep.lower_exact == "41/48" && !rep.sandwich.lower_ok,
              "as-printed (6,1) should fail with lower 41/48, got lower=" +
                  rep.lower_exact);
  }
  return run.take();
}

SuiteResult run_tightness_suite(const SuiteConfig& cfg) {
  SuiteRun run("tightness");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    ScalarPair pair{rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3),
                    rng.next_unit()};
    if (pair.a == pair.b || pair.lambda == 0.0) continue;
    const TightnessReport rep = tightness_report(pair);
    run.check(rep.cf_upper < rep.exp_upper,
              "cf_upper >= exp_upper at a=" + fmt_double(pair.a) +
                  " b=" + fmt_double(pair.b) +
                  " lambda=" + fmt_double(pair.lambda));
  }
  // The cf/log comparison genuinely flips below 1: this input has both a, b
  // in (0, 1) yet the quadratic upper bound is the looser one.
  const TightnessReport ce = tightness_report({0.99, 0.0001, 0.5});
  const oracle::HpTightness hp =
      oracle::hp_tightness(0.99, 0.0001, 0.5, cfg.precision_bits);
  run.check(rel_close(ce.cf_upper, hp.cf_upper, 1e-12),
            "counterexample cf_upper vs oracle: " + fmt_double(ce.cf_upper));
  run.check(rel_close(ce.log_upper, hp.log_upper, 1e-12),
            "counterexample log_upper vs oracle: " + fmt_double(ce.log_upper));
  run.check(std::abs(ce.cf_upper - 1224.9) < 0.05,
            "counterexample cf_upper != 1224.9: " + fmt_double(ce.cf_upper));
  run.check(std::abs(ce.log_upper - 20.95) < 0.005,
            "counterexample log_upper != 20.95: " + fmt_double(ce.log_upper));
  run.check(ce.cf_upper > ce.log_upper,
            "counterexample ordering: expected cf above log");
  return run.take();
}

SuiteResult run_power_mean_suite(const SuiteConfig& cfg) {
  SuiteRun run("power-mean");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    PowerMeanSpec spec;
    const std::size_t n = 1 + rng.uniform_index(32);
    spec.values.resize(n);
    spec.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      spec.values[i] = rng.log_uniform(1e-3, 1e3);
      spec.weights[i] = rng.log_uniform(1e-3, 1e3);
    }
    spec.r = rng.uniform(1e-2, 8.0);
    spec.s = rng.uniform(spec.r, 8.0);
    const double mr = power_mean(spec.values, spec.weights, spec.r);
    const double ms = power_mean(spec.values, spec.weights, spec.s);
    run.check(ms - mr >= -1e-12 * ms,
              "monotonicity M_r <= M_s at r=" + fmt_double(spec.r) +
                  " s=" + fmt_double(spec.s) + ": " + fmt_double(mr) + " vs " +
                  fmt_double(ms));
    const RefinedBound rb = power_mean_sandwich(spec, cfg.tol);
    run.check(rb.sandwich.pass(),
              "power-mean containment at n=" + std::to_string(n) +
                  " r=" + fmt_double(spec.r) + " s=" + fmt_double(spec.s) +
                  " -> " + describe(rb.sandwich));
  }
  return run.take();
}

SuiteResult run_sum_refine_suite(const SuiteConfig& cfg) {
  SuiteRun run("sum-refine");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const std::size_t n = 1 + rng.uniform_index(64);
    std::vector<double> a(n), b(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.log_uniform(1e-3, 1e3);
      b[i] = rng.log_uniform(1e-3, 1e3);
      x[i] = (rng.next_u64() & 1 ? 1.0 : -1.0) * rng.log_uniform(1e-3, 1e3);
    }
    const double p = rng.uniform(1.05, 4.0);
    HolderSpec hs{a, b, p, p / (p - 1.0)};
    const RefinedBound h = holder_sandwich(hs, cfg.tol);
    run.check(h.sandwich.pass(),
              "Hoelder containment at n=" + std::to_string(n) +
                  " p=" + fmt_double(p) + " -> " + describe(h.sandwich));
    const RefinedBound c = cauchy_sandwich(a, b, cfg.tol);
    run.check(c.sandwich.pass(), "Cauchy containment at n=" +
                                     std::to_string(n) + " -> " +
                                     describe(c.sandwich));
    const RefinedBound g = bergstrom_sandwich(x, a, cfg.tol);
    run.check(g.sandwich.pass(), "Bergstroem containment at n=" +
                                     std::to_string(n) + " -> " +
                                     describe(g.sandwich));

    // Cauchy is the p=q=2 Hoelder gap g through middle = g^2 + 2 g sum(ab).
    HolderSpec h2{a, b, 2, 2};
    const RefinedBound h2b = holder_sandwich(h2, cfg.tol);
    const double sab = kern::dot(a, b);
    const double aa = kern::dot(a, a);
    const double bb = kern::dot(b, b);
    const double lifted = h2b.sandwich.middle * h2b.sandwich.middle +
                          2.0 * h2b.sandwich.middle * sab;
    run.check(std::abs(c.sandwich.middle - lifted) <= cfg.tol(aa * bb),
              "Cauchy/Hoelder consistency at n=" + std::to_string(n));

    // Bergstroem reduces to Cauchy on (x_i/sqrt(a_i), sqrt(a_i)), x > 0.
    std::vector<double> xa(n), sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double ax = std::abs(x[i]);
      sq[i] = std::sqrt(a[i]);
      xa[i] = ax / sq[i];
    }
    std::vector<double> absx(n);
    for (std::size_t i = 0; i < n; ++i) absx[i] = std::abs(x[i]);
    const RefinedBound viac = cauchy_sandwich(xa, sq, cfg.tol);
    const RefinedBound direct = bergstrom_sandwich(absx, a, cfg.tol);
    const double sa = kern::sum(a);
    const double scale =
        std::abs(viac.sandwich.middle) / sa + std::abs(direct.sandwich.middle) +
        direct.sandwich.upper;
    run.check(
        std::abs(direct.sandwich.middle - viac.sandwich.middle / sa) <=
                cfg.tol(scale) &&
            std::abs(direct.sandwich.lower - viac.sandwich.lower / sa) <=
                cfg.tol(scale) &&
            std::abs(direct.sandwich.upper - viac.sandwich.upper / sa) <=
                cfg.tol(scale),
        "Bergstroem/Cauchy reduction at n=" + std::to_string(n));
  }
  return run.take();
}

SuiteResult run_arith_suite(const SuiteConfig& cfg) {
  SuiteRun run("arith");
  const double ks[] = {0.0, 0.5, 1.0, 2.0, 3.0};
  for (uint64_t n = 1; n <= cfg.nmax; ++n) {
    const DivisorProfile prof = divisor_profile(n);
    for (bool unitary : {false, true}) {
      for (double k : ks) {
        const DivisorSandwichReport rep = divisor_mean_sandwich(
            prof, k, unitary, DivisorVariant::proof_corrected,
            BigMChoice::n_to_k, cfg.tol);
        run.check(rep.sandwich.pass(),
                  "proof-corrected failure at n=" + std::to_string(n) +
                      " k=" + fmt_double(k) +
                      (unitary ? " unitary" : " all") + " -> " +
                      describe(rep.sandwich));
        if (k == 0.0)
          run.check(rep.sandwich.lower == 0.0 && rep.sandwich.middle == 0.0 &&
                        rep.sandwich.upper == 0.0,
                    "k=0 must collapse to exact zeros at n=" + std::to_string(n));
      }
    }
  }
  const DivisorSandwichReport printed = divisor_mean_sandwich(
      6, 1, false, DivisorVariant::as_printed, BigMChoice::n_as_printed,
      cfg.tol);
  run.check(!printed.sandwich.lower_ok && printed.lower_exact == "41/48",
            "as-printed (6,1) must fail with lower 41/48");
  return run.take();
}

SuiteResult run_arith_identity_suite(const SuiteConfig& cfg) {
  SuiteRun run("arith-identities");
  for (uint64_t n = 1; n <= cfg.nmax; ++n) {
    const DivisorProfile prof = divisor_profile(n);
    unsigned long expected_tau = 1;
    for (const Factor& f : prof.factorization) expected_tau *= f.exponent + 1;
    run.check(prof.divisors.size() == expected_tau,
              "tau(n) mismatch at n=" + std::to_string(n));
    run.check(prof.unitary_divisors.size() ==
                  (1ULL << prof.factorization.size()),
              "tau*(n) mismatch at n=" + std::to_string(n));
    for (bool unitary : {false, true}) {
      const auto& divs = unitary ? prof.unitary_divisors : prof.divisors;
      for (unsigned k : {1u, 2u, 3u}) {
        mpz_class byenum = 0;
        for (uint64_t d : divs) {
          mpz_class p;
          mpz_ui_pow_ui(p.get_mpz_t(), d, k);
          byenum += p;
        }
        run.check(byenum == sigma_multiplicative(n, k, unitary),
                  "sigma_" + std::to_string(k) + " route mismatch at n=" +
                      std::to_string(n) + (unitary ? " unitary" : ""));
      }
      // product of all divisors, squared, is n^tau
      mpz_class prod = 1;
      for (uint64_t d : divs) prod *= mpz_class(static_cast<unsigned long>(d));
      mpz_class ntau;
      mpz_ui_pow_ui(ntau.get_mpz_t(), n, divs.size());
      run.check(prod * prod == ntau, "divisor product identity at n=" +
                                         std::to_string(n) +
                                         (unitary ? " unitary" : ""));
      // complement closure d -> n/d
      bool closed = true;
      for (uint64_t d : divs)
        closed = closed && std::binary_search(divs.begin(), divs.end(), n / d);
      run.check(closed, "complement closure at n=" + std::to_string(n));
    }
  }
  return run.take();
}

SuiteResult run_matrix_suite(const SuiteConfig& cfg) {
  SuiteRun run("matrix");
  for (int dim : cfg.dims) {
    for (uint64_t t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng::for_trial(cfg.seed,
                               (static_cast<uint64_t>(dim) << 40) ^ t);
      auto [lo, hi] = random_comparable_pair(rng, dim);
      const bool flip = (t & 1) != 0;  // exercise the B <= A branch too
      const SymMatrix& A = flip ? hi : lo;
      const SymMatrix& B = flip ? lo : hi;

      for (double lam : cfg.lambda_grid) {
        const OperatorSandwich sw = theorem41_sandwich(A, B, lam);
        // verdict tolerance is 1e-10 * (1 + norm); the acceptance threshold
        // for the slack is the looser 1e-8 * (1 + norm)
        run.check(sw.pass() &&
                      sw.lower_verdict.min_eig_B_minus_A >=
                          -100.0 * sw.lower_verdict.tol_used &&
                      sw.upper_verdict.min_eig_B_minus_A >=
                          -100.0 * sw.upper_verdict.tol_used,
                  "theorem41 verdicts at dim=" + std::to_string(dim) +
                      " lambda=" + fmt_double(lam) + " trial=" +
                      std::to_string(t));
        const ChainReport chain = amghm_chain_check(A, B, lam);
        run.check(chain.pass(), "mean chain at dim=" + std::to_string(dim) +
                                    " lambda=" + fmt_double(lam));
        try {
          const Corollary42Result c42 = corollary42_sandwich(A, B, lam);
          run.check(c42.sandwich.pass(),
                    "corollary42 verdicts at dim=" + std::to_string(dim) +
                        " lambda=" + fmt_double(lam));
        } catch (const DegenerateInput&) {
          // pair drawn too close; nothing to verify
        }
      }

      // arbitrary, not necessarily comparable PD pair
      const SymMatrix P = random_spd(rng, dim, 1e-2, 1e2);
      const SymMatrix Q = random_spd(rng, dim, 1e-2, 1e2);
      const PsdTermsReport psd = remark41_psd_terms(P, Q);
      run.check(psd.both_psd, "remark41 PSD terms at dim=" +
                                  std::to_string(dim) + " trial=" +
                                  std::to_string(t));
      const ChainReport chain2 = amghm_chain_check(P, Q, 0.25);
      run.check(chain2.pass(),
                "mean chain (arbitrary pair) at dim=" + std::to_string(dim));
      const Corollary43Report c43 = corollary43_check(lo, hi);
      run.check(c43.psd, "corollary43 at dim=" + std::to_string(dim) +
                             " trial=" + std::to_string(t) +
                             " min_eig=" + fmt_double(c43.min_eig));
    }
  }
  return run.take();
}

SuiteResult run_coherence_suite(const SuiteConfig& cfg) {
  SuiteRun run("coherence");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const double a = rng.log_uniform(1e-3, 1e3);
    const double b = rng.log_uniform(1e-3, 1e3);
    const double lam = rng.next_unit();
    const SymMatrix A = SymMatrix::diag(std::vector<double>{a});
    const SymMatrix B = SymMatrix::diag(std::vector<double>{b});

    // dim-1 operator sandwich is the scalar sandwich at lambda <-> 1-lambda
    const OperatorSandwich sw = theorem41_sandwich(A, B, lam);
    const ScalarSandwich ref = cf_sandwich_two({a, b, 1.0 - lam}, cfg.tol);
    const double eps = 1e-10;
    run.check(rel_close(sw.lower(0, 0), ref.lower, eps) &&
                  rel_close(sw.middle(0, 0), ref.middle, eps) &&
                  rel_close(sw.upper(0, 0), ref.upper, eps),
              "dim-1 theorem41 vs scalar at a=" + fmt_double(a) +
                  " b=" + fmt_double(b) + " lambda=" + fmt_double(lam));

    const double gm = geometric_mean(A, B, lam)(0, 0);
    const double gm_ref = a * exp_log_pow(b / a, lam);
    run.check(rel_close(gm, gm_ref, eps),
              "dim-1 geometric mean at a=" + fmt_double(a) +
                  " b=" + fmt_double(b));
    const double hm = harmonic_mean(A, B, lam)(0, 0);
    const double hm_ref = 1.0 / ((1.0 - lam) / a + lam / b);
    run.check(rel_close(hm, hm_ref, eps),
              "dim-1 harmonic mean at a=" + fmt_double(a) +
                  " b=" + fmt_double(b));

    const double alo = std::min(a, b);
    const double ahi = std::max(a, b);
    const Corollary43Report c43 =
        corollary43_check(SymMatrix::diag(std::vector<double>{alo}),
                          SymMatrix::diag(std::vector<double>{ahi}));
    const double cube = (ahi - alo) * (ahi - alo) * (ahi - alo) / (alo * ahi);
    run.check(rel_close(c43.expr(0, 0), cube, eps),
              "dim-1 corollary43 cube identity at a=" + fmt_double(alo) +
                  " b=" + fmt_double(ahi));
  }
  return run.take();
}

SuiteResult run_jacobi_suite(const SuiteConfig& cfg) {
  SuiteRun run("jacobi");
  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const int dim = 1 + static_cast<int>(rng.uniform_index(32));
    const SymMatrix S = random_symmetric(rng, dim, rng.log_uniform(1e-3, 1e3));
    const EigenDecomposition ed = jacobi_eigh(S);

    double ortho = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        double dotv = 0.0;
        for (int k = 0; k < dim; ++k)
          dotv += ed.basis[i * dim + k] * ed.basis[j * dim + k];
        const double want = i == j ? 1.0 : 0.0;
        ortho += (dotv - want) * (dotv - want);
      }
    run.check(std::sqrt(ortho) <= 1e-12 * dim,
              "orthogonality residual at dim=" + std::to_string(dim) +
                  " trial=" + std::to_string(t));

    const SymMatrix rec = rebuild(ed, ed.eigenvalues);
    run.check((rec - S).frobenius() <= 1e-12 * S.frobenius(),
              "reconstruction residual at dim=" + std::to_string(dim) +
                  " trial=" + std::to_string(t));
  }
  return run.take();
}

SuiteResult run_kernel_suite(const SuiteConfig& cfg) {
  SuiteRun run("kernels");
  // Exact reference needs every partial sum representable: ~2100 bits spans
  // the full double range, 4500 covers products.
  const int sum_bits = 2200;
  const int dot_bits = 4500;
  const std::size_t sizes[] = {0, 1, 2, 3, 5, 8, 13, 33, 100, 1000, 4097};
  using kern::Backend;
  const Backend saved = kern::active_backend();
  std::vector<Backend> backends{Backend::scalar};
  if (kern::avx2_supported()) backends.push_back(Backend::avx2);

  for (uint64_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const std::size_t n = sizes[t % std::size(sizes)];
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = (rng.next_u64() & 1 ? 1.0 : -1.0) * rng.log_uniform(1e-12, 1e12);
      y[i] = (rng.next_u64() & 1 ? 1.0 : -1.0) * rng.log_uniform(1e-12, 1e12);
    }
    const double exact_sum = oracle::hp_sum(x, sum_bits);
    const double exact_dot = oracle::hp_dot(x, y, dot_bits);
    double abs_sum = 0.0;
    double abs_dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      abs_sum += std::abs(x[i]);
      abs_dot += std::abs(x[i] * y[i]);
    }
    for (Backend bk : backends) {
      kern::force_backend(bk);
      const double s = kern::sum(x);
      run.check(std::abs(s - exact_sum) <= 1e-14 * abs_sum + 1e-280,
                std::string("sum backend ") + kern::backend_name(bk) +
                    " off at n=" + std::to_string(n) + " trial=" +
                    std::to_string(t));
      const double d = kern::dot(x, y);
      run.check(std::abs(d - exact_dot) <= 1e-14 * abs_dot + 1e-280,
                std::string("dot backend ") + kern::backend_name(bk) +
                    " off at n=" + std::to_string(n));
      if (n > 0) {
        const auto [mn, mx] = kern::minmax(x);
        run.check(mn == *std::min_element(x.begin(), x.end()) &&
                      mx == *std::max_element(x.begin(), x.end()),
                  std::string("minmax backend ") + kern::backend_name(bk) +
                      " off at n=" + std::to_string(n));
      }
    }
    if (backends.size() == 2) {
      kern::force_backend(Backend::scalar);
      const double s0 = kern::sum(x);
      const double d0 = kern::dot(x, y);
      kern::force_backend(Backend::avx2);
      run.check(std::abs(kern::sum(x) - s0) <= 1e-15 * abs_sum + 1e-280,
                "sum backends disagree at n=" + std::to_string(n));
      run.check(std::abs(kern::dot(x, y) - d0) <= 1e-15 * abs_dot + 1e-280,
                "dot backends disagree at n=" + std::to_string(n));
    }
  }
  kern::force_backend(saved);
  return run.take();
}

std::vector<std::string> suite_names() {
  return {"scalar",  "fixtures", "tightness",        "power-mean",
          "sum-refine", "arith", "arith-identities", "matrix",
          "coherence",  "jacobi", "kernels"};
}

std::vector<SuiteResult> run_suites(const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* name) {
    return cfg.suite == "all" || cfg.suite == name;
  };
  bool any = false;
  if (want("scalar")) out.push_back(run_scalar_suite(cfg)), any = true;
  if (want("fixtures")) out.push_back(run_fixture_suite(cfg)), any = true;
  if (want("tightness")) out.push_back(run_tightness_suite(cfg)), any = true;
  if (want("power-mean")) out.push_back(run_power_mean_suite(cfg)), any = true;
  if (want("sum-refine")) out.push_back(run_sum_refine_suite(cfg)), any = true;
  if (want("arith")) out.push_back(run_arith_suite(cfg)), any = true;
  if (want("arith-identities"))
    out.push_back(run_arith_identity_suite(cfg)), any = true;
  if (want("matrix")) out.push_back(run_matrix_suite(cfg)), any = true;
  if (want("coherence")) out.push_back(run_coherence_suite(cfg)), any = true;
  if (want("jacobi")) out.push_back(run_jacobi_suite(cfg)), any = true;
  if (want("kernels")) out.push_back(run_kernel_suite(cfg)), any = true;
  if (!any) throw DomainError("unknown suite: " + cfg.suite);
  return out;
}

}  // namespace cfineq
