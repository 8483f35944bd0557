#include "cfineq/scalar_cf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cfineq/errors.hpp"
#include "cfineq/kernels.hpp"

namespace cfineq {
namespace {

// log(DBL_MAX); an exponent beyond this makes the exponential bound vacuous.
constexpr double kMaxExp = 709.782712893384;

}  // namespace

double exp_log_pow(double x, double y) {
  if (y == 0.0) return 1.0;
  if (y == 1.0) return x;
  return std::exp(y * std::log(x));
}

void ScalarPair::validate() const {
  if (!(a > 0.0) || !std::isfinite(a) || !(b > 0.0) || !std::isfinite(b))
    throw DomainError("a and b must be positive finite reals");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0, 1]");
}

void WeightedSample::validate(const Tolerance& tol) const {
  if (points.empty()) throw DomainError("empty sample");
  if (points.size() != weights.size())
    throw DomainError("points/weights size mismatch");
  for (double x : points)
    if (!(x > 0.0) || !std::isfinite(x))
      throw DomainError("points must be positive finite reals");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw DomainError("weights must be positive finite reals");
  if (std::abs(kern::sum(weights) - 1.0) > tol(1.0))
    throw DomainError("weights must sum to 1");
}

double young_gap(const ScalarPair& pair) {
  pair.validate();
  if (pair.lambda == 0.0 || pair.lambda == 1.0 || pair.a == pair.b) return 0.0;
  // Factoring out b keeps the evaluation accurate when a ~ b, where the
  // direct difference of O(a) terms would lose everything to rounding.
  const double t = pair.a / pair.b;
  return pair.b * (pair.lambda * (t - 1.0) -
                   std::expm1(pair.lambda * std::log(t)));
}

ScalarSandwich cf_sandwich_two(const ScalarPair& pair, const Tolerance& tol) {
  pair.validate();
  if (pair.lambda == 0.0 || pair.lambda == 1.0 || pair.a == pair.b)
    return ScalarSandwich::zero();
  const double d = pair.a - pair.b;
  const double coef = pair.lambda * (1.0 - pair.lambda) * d * d;
  return ScalarSandwich::of(coef / (2.0 * pair.max()), young_gap(pair),
                            coef / (2.0 * pair.min()), tol);
}

ScalarSandwich cf_sandwich_n(const WeightedSample& sample,
                             const Tolerance& tol) {
  sample.validate(tol);
  const auto [mn, mx] = kern::minmax(sample.points);
  if (mn == mx) return ScalarSandwich::zero();  // zero variance: AM = GM
  const double mean = kern::dot(sample.weights, sample.points);
  // GM factored around the arithmetic mean: the gap is
  // -mean * expm1(sum w_i log(x_i/mean)), stable for small spreads.
  std::vector<double> logs(sample.points.size());
  for (std::size_t i = 0; i < logs.size(); ++i)
    logs[i] = std::log(sample.points[i] / mean);
  const double gap = -mean * std::expm1(kern::dot(sample.weights, logs));
  const double var = kern::weighted_sq_dev(sample.points, sample.weights, mean);
  return ScalarSandwich::of(var / (2.0 * mx), gap, var / (2.0 * mn), tol);
}

double reverse_young_exp(const ScalarPair& pair) {
  pair.validate();
  if (pair.lambda == 0.0 || pair.lambda == 1.0 || pair.a == pair.b) return 0.0;
  const double m = pair.min();
  const double d = pair.a - pair.b;
  const double y = pair.lambda * (1.0 - pair.lambda) * d * d / (m * m);
  if (y > kMaxExp)
    throw OverflowError("exponential reverse bound exceeds double range");
  const double gm =
      pair.b * std::exp(pair.lambda * std::log(pair.a / pair.b));
  const double v = gm * std::expm1(y);
  if (!std::isfinite(v))
    throw OverflowError("exponential reverse bound exceeds double range");
  return v;
}

double reverse_young_log(const ScalarPair& pair) {
  pair.validate();
  if (pair.lambda == 0.0 || pair.lambda == 1.0 || pair.a == pair.b) return 0.0;
  const double l = std::log(pair.a / pair.b);
  return pair.lambda * (1.0 - pair.lambda) * l * l * pair.max();
}

ScalarSandwich bernoulli_sandwich(double x, double lambda,
                                  const Tolerance& tol) {
  if (!(x > -1.0) || !std::isfinite(x)) throw DomainError("x must exceed -1");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0, 1]");
  if (x == 0.0 || lambda == 0.0 || lambda == 1.0) return ScalarSandwich::zero();
  const double t = x + 1.0;
  const double coef = lambda * (1.0 - lambda) * x * x;
  const double mid = lambda * x - std::expm1(lambda * std::log1p(x));
  return ScalarSandwich::of(coef / (2.0 * std::max(t, 1.0)), mid,
                            coef / (2.0 * std::min(t, 1.0)), tol);
}

TightnessReport tightness_report(const ScalarPair& pair) {
  pair.validate();
  TightnessReport r;
  if (pair.lambda == 0.0 || pair.lambda == 1.0 || pair.a == pair.b) {
    r.ordering = "tie";
    return r;
  }
  const double d = pair.a - pair.b;
  const double coef = pair.lambda * (1.0 - pair.lambda) * d * d;
  const double m = pair.min();
  r.cf_upper = coef / (2.0 * m);
  const double l = std::log(pair.a / pair.b);
  r.log_upper = pair.lambda * (1.0 - pair.lambda) * l * l * pair.max();
  const double y = coef / (m * m);
  if (y > kMaxExp) {
    r.exp_overflow = true;
    r.exp_upper = std::numeric_limits<double>::infinity();
  } else {
    const double gm =
        pair.b * std::exp(pair.lambda * std::log(pair.a / pair.b));
    r.exp_upper = gm * std::expm1(y);
    if (!std::isfinite(r.exp_upper)) {
      r.exp_overflow = true;
      r.exp_upper = std::numeric_limits<double>::infinity();
    }
  }

  struct Entry {
    double v;
    const char* name;
  };
  Entry e[3] = {{r.cf_upper, "cf"}, {r.exp_upper, "exp"}, {r.log_upper, "log"}};
  std::stable_sort(std::begin(e), std::end(e),
                   [](const Entry& x, const Entry& y) { return x.v < y.v; });
  if (e[0].v == e[2].v) {
    r.ordering = "tie";
  } else {
    r.ordering = e[0].name;
    for (int i = 1; i < 3; ++i) {
      r.ordering += (e[i].v == e[i - 1].v) ? "=" : "<";
      r.ordering += e[i].name;
    }
  }
  return r;
}

}  // namespace cfineq
