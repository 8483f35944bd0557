#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "cfineq/kernels.hpp"

// AVX2+FMA variants of the reference kernels: four independent Neumaier
// accumulators, merged into one scalar accumulator at the end. Lane split
// changes the association order, so results may differ from the scalar
// backend in the last ulp; the equivalence suite pins that down.

namespace cfineq::kern::detail {
namespace {

inline __m256d vabs(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

struct VAcc {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();

  // Branchless Neumaier step: pick the larger-magnitude operand for the
  // error recovery term.
  inline void add(__m256d v) {
    const __m256d t = _mm256_add_pd(s, v);
    const __m256d s_big = _mm256_cmp_pd(vabs(s), vabs(v), _CMP_GE_OQ);
    const __m256d big = _mm256_blendv_pd(v, s, s_big);
    const __m256d small = _mm256_blendv_pd(s, v, s_big);
    c = _mm256_add_pd(c, _mm256_add_pd(_mm256_sub_pd(big, t), small));
    s = t;
  }
};

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
};

inline Acc merge(const VAcc& va) {
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, va.s);
  _mm256_store_pd(c, va.c);
  Acc a;
  for (int k = 0; k < 4; ++k) a.add(s[k]);
  for (int k = 0; k < 4; ++k) a.c += c[k];
  return a;
}

double sum_avx2(const double* x, std::size_t n) {
  VAcc va;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) va.add(_mm256_loadu_pd(x + i));
  Acc a = merge(va);
  for (; i < n; ++i) a.add(x[i]);
  return a.s + a.c;
}

double sum_abs_avx2(const double* x, std::size_t n) {
  VAcc va;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) va.add(vabs(_mm256_loadu_pd(x + i)));
  Acc a = merge(va);
  for (; i < n; ++i) a.add(std::abs(x[i]));
  return a.s + a.c;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  VAcc va;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d p = _mm256_mul_pd(xv, yv);
    const __m256d e = _mm256_fmsub_pd(xv, yv, p);
    va.add(p);
    va.c = _mm256_add_pd(va.c, e);
  }
  Acc a = merge(va);
  for (; i < n; ++i) {
    const double p = x[i] * y[i];
    a.add(p);
    a.c += std::fma(x[i], y[i], -p);
  }
  return a.s + a.c;
}

double sum_sq_diff_avx2(const double* x, const double* y, std::size_t n) {
  VAcc va;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    const __m256d p = _mm256_mul_pd(d, d);
    const __m256d e = _mm256_fmsub_pd(d, d, p);
    va.add(p);
    va.c = _mm256_add_pd(va.c, e);
  }
  Acc a = merge(va);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    const double p = d * d;
    a.add(p);
    a.c += std::fma(d, d, -p);
  }
  return a.s + a.c;
}

double weighted_sq_dev_avx2(const double* x, const double* w, std::size_t n,
                            double center) {
  const __m256d cv = _mm256_set1_pd(center);
  VAcc va;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), cv);
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d q = _mm256_mul_pd(d, d);
    const __m256d e1 = _mm256_fmsub_pd(d, d, q);
    const __m256d t = _mm256_mul_pd(wv, q);
    const __m256d e2 = _mm256_fmsub_pd(wv, q, t);
    va.add(t);
    va.c = _mm256_add_pd(va.c, _mm256_fmadd_pd(wv, e1, e2));
  }
  Acc a = merge(va);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    const double q = d * d;
    const double e1 = std::fma(d, d, -q);
    const double t = w[i] * q;
    const double e2 = std::fma(w[i], q, -t);
    a.add(t);
    a.c += std::fma(w[i], e1, e2);
  }
  return a.s + a.c;
}

void minmax_avx2(const double* x, std::size_t n, double* lo, double* hi) {
  std::size_t i = 0;
  double mn = x[0];
  double mx = x[0];
  if (n >= 4) {
    __m256d vmn = _mm256_loadu_pd(x);
    __m256d vmx = vmn;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d v = _mm256_loadu_pd(x + i);
      vmn = _mm256_min_pd(vmn, v);
      vmx = _mm256_max_pd(vmx, v);
    }
    alignas(32) double a[4];
    alignas(32) double b[4];
    _mm256_store_pd(a, vmn);
    _mm256_store_pd(b, vmx);
    mn = a[0];
    mx = b[0];
    for (int k = 1; k < 4; ++k) {
      if (a[k] < mn) mn = a[k];
      if (b[k] > mx) mx = b[k];
    }
  }
  for (; i < n; ++i) {
    if (x[i] < mn) mn = x[i];
    if (x[i] > mx) mx = x[i];
  }
  *lo = mn;
  *hi = mx;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{sum_avx2,         sum_abs_avx2,         dot_avx2,
                       sum_sq_diff_avx2, weighted_sq_dev_avx2, minmax_avx2};
  return ops;
}

}  // namespace cfineq::kern::detail

#endif  // x86_64
