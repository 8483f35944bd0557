#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "cfineq/errors.hpp"
#include "cfineq/kernels.hpp"

namespace cfineq::kern {
namespace {

using detail::Ops;

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* ops_for(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::avx2) return &detail::avx2_ops();
#endif
  (void)b;
  return &detail::scalar_ops();
}

Backend pick_initial() {
  if (const char* env = std::getenv("CFINEQ_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (cpu_has_avx2()) return Backend::avx2;
      std::fprintf(stderr, "cfineq: CFINEQ_KERNEL=avx2 but CPU lacks AVX2+FMA, using scalar\n");
      return Backend::scalar;
    }
    if (std::strcmp(env, "auto") != 0)
      std::fprintf(stderr, "cfineq: unknown CFINEQ_KERNEL=%s, using auto\n", env);
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

struct State {
  std::atomic<const Ops*> ops;
  std::atomic<Backend> backend;

  State() {
    const Backend b = pick_initial();
    backend.store(b);
    ops.store(ops_for(b));
  }
};

State& state() {
  static State s;
  return s;
}

const Ops& ops() { return *state().ops.load(std::memory_order_acquire); }

}  // namespace

Backend active_backend() { return state().backend.load(); }

bool avx2_supported() { return cpu_has_avx2(); }

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2())
    throw DomainError("avx2 backend not supported on this CPU");
  state().backend.store(b);
  state().ops.store(ops_for(b), std::memory_order_release);
}

double sum(std::span<const double> x) { return ops().sum(x.data(), x.size()); }

double sum_abs(std::span<const double> x) {
  return ops().sum_abs(x.data(), x.size());
}

double dot(std::span<const double> x, std::span<const double> y) {
  return ops().dot(x.data(), y.data(), x.size());
}

double sum_sq_diff(std::span<const double> x, std::span<const double> y) {
  return ops().sum_sq_diff(x.data(), y.data(), x.size());
}

double weighted_sq_dev(std::span<const double> x, std::span<const double> w,
                       double center) {
  return ops().weighted_sq_dev(x.data(), w.data(), x.size(), center);
}

std::pair<double, double> minmax(std::span<const double> x) {
  double lo = 0.0;
  double hi = 0.0;
  ops().minmax(x.data(), x.size(), &lo, &hi);
  return {lo, hi};
}

}  // namespace cfineq::kern
