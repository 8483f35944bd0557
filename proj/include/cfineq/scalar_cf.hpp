#pragma once

#include <string>
#include <vector>

#include "cfineq/sandwich.hpp"
#include "cfineq/tolerance.hpp"

namespace cfineq {

/// Pair of positive reals with an interpolation weight lambda in [0, 1].
struct ScalarPair {
  double a = 1.0;
  double b = 1.0;
  double lambda = 0.5;

  double min() const { return a < b ? a : b; }
  double max() const { return a > b ? a : b; }
  void validate() const;
};

/// Positive points x_i with positive weights summing to 1.
struct WeightedSample {
  std::vector<double> points;
  std::vector<double> weights;

  void validate(const Tolerance& tol = default_tolerance()) const;
};

/// exp(y * log(x)): the single route used for every power with a real
/// exponent, with y = 0 and y = 1 short-circuited to exact results.
double exp_log_pow(double x, double y);

/// lambda*a + (1-lambda)*b - a^lambda * b^(1-lambda), the weighted AM-GM gap
/// of the pair. Nonnegative up to rounding.
double young_gap(const ScalarPair& pair);

/// Sandwiches the two-variable AM-GM gap between
/// lambda(1-lambda)(a-b)^2 / (2*max) and the same expression over 2*min.
ScalarSandwich cf_sandwich_two(const ScalarPair& pair,
                               const Tolerance& tol = default_tolerance());

/// n-variable form: the gap sum(a_i x_i) - prod(x_i^a_i) sandwiched between
/// the weighted squared deviation scaled by 1/(2*max) and 1/(2*min).
ScalarSandwich cf_sandwich_n(const WeightedSample& sample,
                             const Tolerance& tol = default_tolerance());

/// Exponential reverse bound gm * (exp(lambda(1-lambda)(a-b)^2/min^2) - 1).
/// Throws OverflowError when the exponent makes the bound vacuous.
double reverse_young_exp(const ScalarPair& pair);

/// Logarithmic reverse bound lambda(1-lambda) * log(a/b)^2 * max.
double reverse_young_log(const ScalarPair& pair);

/// Sandwich for the Bernoulli gap lambda*x + 1 - (x+1)^lambda, x > -1, with
/// min/max taken over {x+1, 1}.
ScalarSandwich bernoulli_sandwich(double x, double lambda,
                                  const Tolerance& tol = default_tolerance());

/// The three upper bounds on the same gap and their empirical ordering.
/// cf_upper < exp_upper always holds for a != b, lambda in (0, 1); the
/// cf/log order genuinely flips with the inputs and is only reported.
struct TightnessReport {
  double cf_upper = 0.0;
  double exp_upper = 0.0;  // +inf when the exponential bound overflows
  double log_upper = 0.0;
  bool exp_overflow = false;
  std::string ordering;  // e.g. "cf<log<exp"; "tie" when all coincide
};

TightnessReport tightness_report(const ScalarPair& pair);

}  // namespace cfineq
