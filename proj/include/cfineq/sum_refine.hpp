#pragma once

#include <span>
#include <vector>

#include "cfineq/sandwich.hpp"
#include "cfineq/tolerance.hpp"

namespace cfineq {

/// Inputs for the weighted power mean comparison M_r vs M_s, 0 < r <= s.
struct PowerMeanSpec {
  std::vector<double> values;
  std::vector<double> weights;
  double r = 1.0;
  double s = 1.0;

  void validate() const;
};

/// Conjugate-exponent inputs for the Hoelder refinement: 1/p + 1/q = 1.
struct HolderSpec {
  std::vector<double> avec;
  std::vector<double> bvec;
  double p = 2.0;
  double q = 2.0;

  void validate(const Tolerance& tol = default_tolerance()) const;
};

/// Coefficient A and the fraction range [m, M] a sandwich was built from.
struct BoundContext {
  double A = 0.0;
  double m = 1.0;
  double M = 1.0;
};

struct RefinedBound {
  ScalarSandwich sandwich;
  BoundContext context;
};

/// Weighted power mean (sum p_i a_i^r / sum p_i)^(1/r).
double power_mean(std::span<const double> values,
                  std::span<const double> weights, double r);

/// Sandwich for M_s^r - M_r^r with A = r(s-r)/(2s^2) * M_s^r * weighted mean
/// of (a_i^s / M_s^s - 1)^2, and m, M ranging over {a_i^s / M_s^s} u {1}.
RefinedBound power_mean_sandwich(const PowerMeanSpec& spec,
                                 const Tolerance& tol = default_tolerance());

/// Sandwich for the Hoelder gap (sum a^p)^(1/p) (sum b^q)^(1/q) - sum ab
/// built from the normalized fractions a_i^p/sum a^p and b_i^q/sum b^q.
RefinedBound holder_sandwich(const HolderSpec& spec,
                             const Tolerance& tol = default_tolerance());

/// Sandwich for the Cauchy gap (sum a^2)(sum b^2) - (sum ab)^2; the bounds
/// are A^2/M^2 + (2A/M) sum ab and the same with m.
RefinedBound cauchy_sandwich(std::span<const double> avec,
                             std::span<const double> bvec,
                             const Tolerance& tol = default_tolerance());

/// Sandwich for the Bergstroem gap sum x^2/a - (sum |x|)^2 / sum a. Signs of
/// x only enter through x^2 and |x|; an all-zero x yields the zero sandwich.
RefinedBound bergstrom_sandwich(std::span<const double> xvec,
                                std::span<const double> avec,
                                const Tolerance& tol = default_tolerance());

}  // namespace cfineq
