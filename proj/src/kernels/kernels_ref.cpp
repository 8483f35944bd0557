#include <cmath>
#include <cstddef>

#include "cfineq/kernels.hpp"

// Scalar reference kernels. Neumaier accumulation: running sum plus a
// separate compensation term that absorbs the rounding error of each add;
// products additionally capture their rounding error through an FMA.

namespace cfineq::kern::detail {
namespace {

struct Acc {
  double s = 0.0;
  double c = 0.0;

  void add(double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }

  double value() const { return s + c; }
};

double sum_ref(const double* x, std::size_t n) {
  Acc a;
  for (std::size_t i = 0; i < n; ++i) a.add(x[i]);
  return a.value();
}

double sum_abs_ref(const double* x, std::size_t n) {
  Acc a;
  for (std::size_t i = 0; i < n; ++i) a.add(std::abs(x[i]));
  return a.value();
}

double dot_ref(const double* x, const double* y, std::size_t n) {
  Acc a;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = x[i] * y[i];
    const double e = std::fma(x[i], y[i], -p);  // exact product residual
    a.add(p);
    a.c += e;
  }
  return a.value();
}

double sum_sq_diff_ref(const double* x, const double* y, std::size_t n) {
  Acc a;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    const double p = d * d;
    const double e = std::fma(d, d, -p);
    a.add(p);
    a.c += e;
  }
  return a.value();
}

double weighted_sq_dev_ref(const double* x, const double* w, std::size_t n,
                           double center) {
  Acc a;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - center;
    const double q = d * d;
    const double e1 = std::fma(d, d, -q);
    const double t = w[i] * q;
    const double e2 = std::fma(w[i], q, -t);
    a.add(t);
    a.c += std::fma(w[i], e1, e2);
  }
  return a.value();
}

void minmax_ref(const double* x, std::size_t n, double* lo, double* hi) {
  double mn = x[0];
  double mx = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < mn) mn = x[i];
    if (x[i] > mx) mx = x[i];
  }
  *lo = mn;
  *hi = mx;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{sum_ref,         sum_abs_ref,         dot_ref,
                       sum_sq_diff_ref, weighted_sq_dev_ref, minmax_ref};
  return ops;
}

}  // namespace cfineq::kern::detail
