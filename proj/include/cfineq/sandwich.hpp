#pragma once

#include "cfineq/tolerance.hpp"

namespace cfineq {

/// A two-sided bound lower <= middle <= upper together with the slacks and
/// the verdicts of both comparisons. The scale fed to the tolerance is
/// |middle| + |upper|; every quantity bounded here is homogeneous in its
/// inputs, so this tracks the working magnitude.
struct ScalarSandwich {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double slack_lower = 0.0;  // middle - lower
  double slack_upper = 0.0;  // upper - middle
  bool lower_ok = true;
  bool upper_ok = true;

  static ScalarSandwich of(double lower, double middle, double upper,
                           const Tolerance& tol = default_tolerance()) {
    ScalarSandwich s;
    s.lower = lower;
    s.middle = middle;
    s.upper = upper;
    s.slack_lower = middle - lower;
    s.slack_upper = upper - middle;
    const double t = tol(std::abs(middle) + std::abs(upper));
    s.lower_ok = s.slack_lower >= -t;
    s.upper_ok = s.slack_upper >= -t;
    return s;
  }

  static ScalarSandwich zero() { return ScalarSandwich{}; }

  bool pass() const { return lower_ok && upper_ok; }
};

}  // namespace cfineq
