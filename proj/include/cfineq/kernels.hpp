#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace cfineq::kern {

enum class Backend { scalar, avx2 };

/// Backend picked at first use: AVX2+FMA when the CPU supports it, otherwise
/// the scalar reference. CFINEQ_KERNEL={auto,scalar,avx2} overrides.
Backend active_backend();
void force_backend(Backend b);
bool avx2_supported();
const char* backend_name(Backend b);

// Compensated (Neumaier) reductions. Every accumulation in the library runs
// through these so the slack of a checked inequality is dominated by the
// tolerance, not by summation error. All variants agree to ~1 ulp of the
// exact result; SIMD/scalar equivalence is asserted by the test suite.

double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

/// Sum of (x_i - y_i)^2 with two-product error capture.
double sum_sq_diff(std::span<const double> x, std::span<const double> y);

/// Sum of w_i * (x_i - center)^2.
double weighted_sq_dev(std::span<const double> x, std::span<const double> w,
                       double center);

/// Minimum and maximum element; x must be nonempty.
std::pair<double, double> minmax(std::span<const double> x);

namespace detail {

struct Ops {
  double (*sum)(const double*, std::size_t);
  double (*sum_abs)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_sq_diff)(const double*, const double*, std::size_t);
  double (*weighted_sq_dev)(const double*, const double*, std::size_t, double);
  void (*minmax)(const double*, std::size_t, double*, double*);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

}  // namespace detail

}  // namespace cfineq::kern
