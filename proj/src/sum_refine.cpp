#include "cfineq/sum_refine.hpp"

#include <algorithm>
#include <cmath>

#include "cfineq/errors.hpp"
#include "cfineq/kernels.hpp"
#include "cfineq/scalar_cf.hpp"

namespace cfineq {
namespace {

void require_positive(std::span<const double> v, const char* what) {
  for (double x : v)
    if (!(x > 0.0) || !std::isfinite(x))
      throw DomainError(std::string(what) + " must be positive finite reals");
}

// aa*bb - ab2 with the products' rounding errors recovered through FMA;
// cuts the cancellation error when the two products nearly coincide.
double product_diff(double aa, double bb, double ab1, double ab2) {
  const double p1 = aa * bb;
  const double e1 = std::fma(aa, bb, -p1);
  const double p2 = ab1 * ab2;
  const double e2 = std::fma(ab1, ab2, -p2);
  return (p1 - p2) + (e1 - e2);
}

std::pair<double, double> minmax2(std::span<const double> x,
                                  std::span<const double> y) {
  const auto [xlo, xhi] = kern::minmax(x);
  const auto [ylo, yhi] = kern::minmax(y);
  return {std::min(xlo, ylo), std::max(xhi, yhi)};
}

bool same_entries(std::span<const double> x, std::span<const double> y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

}  // namespace

void PowerMeanSpec::validate() const {
  if (values.empty()) throw DomainError("empty values");
  if (values.size() != weights.size())
    throw DomainError("values/weights size mismatch");
  require_positive(values, "values");
  require_positive(weights, "weights");
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(s) || !(s >= r))
    throw DomainError("exponents must satisfy 0 < r <= s");
}

void HolderSpec::validate(const Tolerance& tol) const {
  if (avec.empty() || avec.size() != bvec.size())
    throw DomainError("vectors must be nonempty and of equal length");
  require_positive(avec, "avec");
  require_positive(bvec, "bvec");
  if (!(p > 1.0) || !(q > 1.0))
    throw DomainError("exponents must exceed 1");
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > tol(1.0))
    throw DomainError("exponents must be conjugate: 1/p + 1/q = 1");
}

double power_mean(std::span<const double> values,
                  std::span<const double> weights, double r) {
  if (values.empty() || values.size() != weights.size())
    throw DomainError("values/weights size mismatch");
  require_positive(values, "values");
  require_positive(weights, "weights");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("r must be positive");
  std::vector<double> powed(values.size());
  for (std::size_t i = 0; i < powed.size(); ++i)
    powed[i] = exp_log_pow(values[i], r);
  const double num = kern::dot(weights, powed);
  const double den = kern::sum(weights);
  return exp_log_pow(num / den, 1.0 / r);
}

RefinedBound power_mean_sandwich(const PowerMeanSpec& spec,
                                 const Tolerance& tol) {
  spec.validate();
  const auto [vlo, vhi] = kern::minmax(spec.values);
  if (spec.r == spec.s || vlo == vhi)
    return {ScalarSandwich::zero(), BoundContext{0.0, 1.0, 1.0}};

  const std::size_t n = spec.values.size();
  const double den = kern::sum(spec.weights);
  std::vector<double> ps(n), pr(n);
  for (std::size_t i = 0; i < n; ++i) {
    ps[i] = exp_log_pow(spec.values[i], spec.s);
    pr[i] = exp_log_pow(spec.values[i], spec.r);
  }
  const double Ss = kern::dot(spec.weights, ps) / den;  // M_s^s
  const double Sr = kern::dot(spec.weights, pr) / den;  // M_r^r
  const double Msr = exp_log_pow(Ss, spec.r / spec.s);  // M_s^r

  // Normalized fractions a_i^s / M_s^s; computed once and reused in A, m, M.
  std::vector<double>& frac = ps;
  for (std::size_t i = 0; i < n; ++i) frac[i] /= Ss;
  const double disp = kern::weighted_sq_dev(frac, spec.weights, 1.0) / den;
  const auto [flo, fhi] = kern::minmax(frac);

  BoundContext ctx;
  ctx.m = std::min(flo, 1.0);
  ctx.M = std::max(fhi, 1.0);
  ctx.A = spec.r * (spec.s - spec.r) / (2.0 * spec.s * spec.s) * Msr * disp;
  return {ScalarSandwich::of(ctx.A / ctx.M, Msr - Sr, ctx.A / ctx.m, tol), ctx};
}

RefinedBound holder_sandwich(const HolderSpec& spec, const Tolerance& tol) {
  spec.validate(tol);
  const std::size_t n = spec.avec.size();
  std::vector<double> ap(n), bq(n);
  for (std::size_t i = 0; i < n; ++i) {
    ap[i] = exp_log_pow(spec.avec[i], spec.p);
    bq[i] = exp_log_pow(spec.bvec[i], spec.q);
  }
  const double sa = kern::sum(ap);
  const double sb = kern::sum(bq);
  for (std::size_t i = 0; i < n; ++i) {
    ap[i] /= sa;  // now the normalized fractions
    bq[i] /= sb;
  }
  const auto [m, M] = minmax2(ap, bq);
  if (same_entries(ap, bq))  // exact equality case of the inequality
    return {ScalarSandwich::zero(), BoundContext{0.0, m, M}};

  const double C =
      exp_log_pow(sa, 1.0 / spec.p) * exp_log_pow(sb, 1.0 / spec.q);
  const double sab = kern::dot(spec.avec, spec.bvec);
  const double A =
      C * kern::sum_sq_diff(ap, bq) / (2.0 * spec.p * spec.q);
  BoundContext ctx{A, m, M};
  return {ScalarSandwich::of(A / M, C - sab, A / m, tol), ctx};
}

RefinedBound cauchy_sandwich(std::span<const double> avec,
                             std::span<const double> bvec,
                             const Tolerance& tol) {
  if (avec.empty() || avec.size() != bvec.size())
    throw DomainError("vectors must be nonempty and of equal length");
  require_positive(avec, "avec");
  require_positive(bvec, "bvec");
  const std::size_t n = avec.size();
  std::vector<double> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = avec[i] * avec[i];
    fb[i] = bvec[i] * bvec[i];
  }
  const double aa = kern::sum(fa);
  const double bb = kern::sum(fb);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] /= aa;
    fb[i] /= bb;
  }
  const auto [m, M] = minmax2(fa, fb);
  if (same_entries(fa, fb))
    return {ScalarSandwich::zero(), BoundContext{0.0, m, M}};

  const double ab = kern::dot(avec, bvec);
  const double mid = product_diff(aa, bb, ab, ab);
  const double A = 0.125 * std::sqrt(aa * bb) * kern::sum_sq_diff(fa, fb);
  BoundContext ctx{A, m, M};
  const double lo = A / M * (A / M) + 2.0 * A / M * ab;
  const double up = A / m * (A / m) + 2.0 * A / m * ab;
  return {ScalarSandwich::of(lo, mid, up, tol), ctx};
}

RefinedBound bergstrom_sandwich(std::span<const double> xvec,
                                std::span<const double> avec,
                                const Tolerance& tol) {
  if (xvec.empty() || xvec.size() != avec.size())
    throw DomainError("vectors must be nonempty and of equal length");
  require_positive(avec, "avec");
  for (double x : xvec)
    if (!std::isfinite(x)) throw DomainError("xvec must be finite");
  if (std::all_of(xvec.begin(), xvec.end(), [](double v) { return v == 0.0; }))
    return {ScalarSandwich::zero(), BoundContext{0.0, 1.0, 1.0}};

  const std::size_t n = xvec.size();
  std::vector<double> fx(n), fa(n);
  for (std::size_t i = 0; i < n; ++i) fx[i] = xvec[i] * xvec[i] / avec[i];
  const double S = kern::sum(fx);   // sum x^2/a
  const double Sa = kern::sum(avec);
  const double Sabs = kern::sum_abs(xvec);
  for (std::size_t i = 0; i < n; ++i) {
    fx[i] /= S;
    fa[i] = avec[i] / Sa;
  }
  const auto [m, M] = minmax2(fx, fa);
  if (same_entries(fx, fa))
    return {ScalarSandwich::zero(), BoundContext{0.0, m, M}};

  const double mid = S - Sabs * Sabs / Sa;
  const double A = 0.125 * std::sqrt(S * Sa) * kern::sum_sq_diff(fx, fa);
  BoundContext ctx{A, m, M};
  const double lo = (A / M * (A / M) + 2.0 * A / M * Sabs) / Sa;
  const double up = (A / m * (A / m) + 2.0 * A / m * Sabs) / Sa;
  return {ScalarSandwich::of(lo, mid, up, tol), ctx};
}

}  // namespace cfineq
