#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfineq/rng.hpp"
#include "cfineq/symmat.hpp"
#include "cfineq/tolerance.hpp"

namespace cfineq {

/// Configuration for one verification suite run.
struct SuiteConfig {
  std::string suite = "all";
  uint64_t trials = 1000;
  uint64_t seed = 42;
  std::vector<int> dims = {1, 2, 4, 8};
  std::vector<double> lambda_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int precision_bits = 256;
  uint64_t nmax = 2000;  // divisor scans
  Tolerance tol{};
};

struct SuiteResult {
  std::string suite;
  uint64_t checks = 0;
  uint64_t failures = 0;
  std::vector<std::string> failure_details;  // first few, for the report
  double elapsed_sec = 0.0;

  bool pass() const { return failures == 0; }
};

// One runner per invariant family. Each is deterministic in (config.seed);
// trials derive independent streams from (seed, trial index).

SuiteResult run_scalar_suite(const SuiteConfig& cfg);      // two-variable, n-variable, Bernoulli containment
SuiteResult run_fixture_suite(const SuiteConfig& cfg);     // worked values vs the 256-bit oracle
SuiteResult run_tightness_suite(const SuiteConfig& cfg);   // upper-bound comparisons incl. the cf/log flip
SuiteResult run_power_mean_suite(const SuiteConfig& cfg);  // monotonicity M_r <= M_s plus sandwich
SuiteResult run_sum_refine_suite(const SuiteConfig& cfg);  // Hoelder/Cauchy/Bergstroem containment + identities
SuiteResult run_arith_suite(const SuiteConfig& cfg);       // divisor-mean scan over n <= nmax
SuiteResult run_arith_identity_suite(const SuiteConfig& cfg);  // enumeration vs closed form, divisor product identity
SuiteResult run_matrix_suite(const SuiteConfig& cfg);      // operator sandwiches on seeded PD pairs
SuiteResult run_coherence_suite(const SuiteConfig& cfg);   // dim-1 operator checks vs scalar formulas
SuiteResult run_jacobi_suite(const SuiteConfig& cfg);      // eigensolver residuals
SuiteResult run_kernel_suite(const SuiteConfig& cfg);      // reduction backends vs exact sums

/// All suites in a fixed order; unknown names throw DomainError.
std::vector<SuiteResult> run_suites(const SuiteConfig& cfg);
std::vector<std::string> suite_names();

// Seeded generators shared by the matrix suites and tests.
SymMatrix random_symmetric(Rng& rng, int dim, double scale);
SymMatrix random_spd(Rng& rng, int dim, double eig_lo, double eig_hi);
/// (A, B) with A <= B by construction: B = A + C, C independently PD.
std::pair<SymMatrix, SymMatrix> random_comparable_pair(Rng& rng, int dim);

}  // namespace cfineq
