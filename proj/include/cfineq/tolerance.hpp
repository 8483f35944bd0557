#pragma once

#include <algorithm>
#include <cmath>

namespace cfineq {

/// Relative tolerance with an absolute floor. All comparisons in the library
/// go through tol(scale) = rel_eps * max(1, scale), so bounds on quantities
/// below unit magnitude are checked absolutely and larger ones relatively.
struct Tolerance {
  double rel_eps = 1e-12;
  double abs_floor = 1e-300;

  double operator()(double scale) const {
    return std::max(rel_eps * std::max(1.0, std::abs(scale)), abs_floor);
  }
};

inline const Tolerance& default_tolerance() {
  static const Tolerance t{};
  return t;
}

}  // namespace cfineq
