#include "cfineq/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "cfineq/errors.hpp"
#include "cfineq/report.hpp"

namespace cfineq::oracle {
namespace {

ScalarSandwich pack(const Real& lower, const Real& middle, const Real& upper,
                    const Tolerance& tol) {
  ScalarSandwich s;
  s.lower = lower.to_double();
  s.middle = middle.to_double();
  s.upper = upper.to_double();
  s.slack_lower = (middle - lower).to_double();
  s.slack_upper = (upper - middle).to_double();
  const double t = tol(std::abs(s.middle) + std::abs(s.upper));
  s.lower_ok = s.slack_lower >= -t;
  s.upper_ok = s.slack_upper >= -t;
  return s;
}

Real weighted_sum(std::span<const double> w, const std::vector<Real>& x,
                  int bits) {
  Real acc(bits);
  for (std::size_t i = 0; i < x.size(); ++i) acc += Real(w[i], bits) * x[i];
  return acc;
}

}  // namespace

const char* to_string(Kind k) {
  switch (k) {
    case Kind::cf_two: return "cf_two";
    case Kind::cf_n: return "cf_n";
    case Kind::bernoulli: return "bernoulli";
    case Kind::power_mean: return "power_mean";
    case Kind::holder: return "holder";
    case Kind::cauchy: return "cauchy";
    case Kind::bergstrom: return "bergstrom";
    case Kind::divisor_mean: return "divisor_mean";
  }
  return "?";
}

ScalarSandwich hp_cf_two(double a, double b, double lambda, int bits,
                         const Tolerance& tol) {
  if (!(a > 0) || !(b > 0)) throw DomainError("a, b must be positive");
  if (!(lambda >= 0 && lambda <= 1)) throw DomainError("lambda outside [0, 1]");
  if (a == b || lambda == 0 || lambda == 1) return ScalarSandwich::zero();
  const Real A(a, bits), B(b, bits), L(lambda, bits), one(1.0, bits);
  const Real coef = L * (one - L) * (A - B) * (A - B);
  const Real lo = coef / (Real(2.0, bits) * Real(std::max(a, b), bits));
  const Real up = coef / (Real(2.0, bits) * Real(std::min(a, b), bits));
  const Real mid = L * A + (one - L) * B - pow(A, L) * pow(B, one - L);
  return pack(lo, mid, up, tol);
}

ScalarSandwich hp_cf_n(std::span<const double> points,
                       std::span<const double> weights, int bits,
                       const Tolerance& tol) {
  if (points.empty() || points.size() != weights.size())
    throw DomainError("points/weights size mismatch");
  const auto [mn, mx] = std::minmax_element(points.begin(), points.end());
  if (*mn == *mx) return ScalarSandwich::zero();
  std::vector<Real> xs;
  xs.reserve(points.size());
  for (double v : points) xs.emplace_back(v, bits);
  const Real mean = weighted_sum(weights, xs, bits);
  Real log_gm(bits);
  Real var(bits);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Real w(weights[i], bits);
    log_gm += w * log(xs[i]);
    const Real d = xs[i] - mean;
    var += w * d * d;
  }
  const Real mid = mean - exp(log_gm);
  const Real lo = var / (Real(2.0, bits) * Real(*mx, bits));
  const Real up = var / (Real(2.0, bits) * Real(*mn, bits));
  return pack(lo, mid, up, tol);
}

ScalarSandwich hp_bernoulli(double x, double lambda, int bits,
                            const Tolerance& tol) {
  if (!(x > -1)) throw DomainError("x must exceed -1");
  if (!(lambda >= 0 && lambda <= 1)) throw DomainError("lambda outside [0, 1]");
  if (x == 0 || lambda == 0 || lambda == 1) return ScalarSandwich::zero();
  const Real X(x, bits), L(lambda, bits), one(1.0, bits);
  const Real t = X + one;
  const Real coef = L * (one - L) * X * X;
  const Real m = t < one ? t : one;
  const Real M = t > one ? t : one;
  const Real mid = L * X + one - pow(t, L);
  return pack(coef / (Real(2.0, bits) * M), mid, coef / (Real(2.0, bits) * m), tol);
}

ScalarSandwich hp_power_mean(std::span<const double> values,
                             std::span<const double> weights, double r, double s,
                             int bits, const Tolerance& tol) {
  if (values.empty() || values.size() != weights.size())
    throw DomainError("values/weights size mismatch");
  if (!(r > 0) || !(s >= r)) throw DomainError("need 0 < r <= s");
  if (r == s) return ScalarSandwich::zero();
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  if (*mn == *mx) return ScalarSandwich::zero();
  const Real R(r, bits), S(s, bits), one(1.0, bits), two(2.0, bits);
  Real den(bits), sum_s(bits), sum_r(bits);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Real w(weights[i], bits), a(values[i], bits);
    den += w;
    sum_s += w * pow(a, S);
    sum_r += w * pow(a, R);
  }
  const Real Ss = sum_s / den;       // M_s^s
  const Real Sr = sum_r / den;       // M_r^r
  const Real Msr = pow(Ss, R / S);   // M_s^r
  Real disp(bits);
  Real m = one, M = one;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Real w(weights[i], bits), a(values[i], bits);
    const Real f = pow(a, S) / Ss;
    const Real d = f - one;
    disp += w * d * d;
    if (f < m) m = f;
    if (f > M) M = f;
  }
  disp /= den;
  const Real A = R * (S - R) / (two * S * S) * Msr * disp;
  return pack(A / M, Msr - Sr, A / m, tol);
}

ScalarSandwich hp_holder(std::span<const double> avec,
                         std::span<const double> bvec, double p, double q,
                         int bits, const Tolerance& tol) {
  if (avec.empty() || avec.size() != bvec.size())
    throw DomainError("vector size mismatch");
  const Real P(p, bits), Q(q, bits), one(1.0, bits), two(2.0, bits);
  Real sa(bits), sb(bits), sab(bits);
  for (std::size_t i = 0; i < avec.size(); ++i) {
    const Real a(avec[i], bits), b(bvec[i], bits);
    sa += pow(a, P);
    sb += pow(b, Q);
    sab += a * b;
  }
  const Real C = pow(sa, one / P) * pow(sb, one / Q);
  Real ssd(bits);
  Real m(bits), M(bits);
  bool have = false;
  for (std::size_t i = 0; i < avec.size(); ++i) {
    const Real fa = pow(Real(avec[i], bits), P) / sa;
    const Real fb = pow(Real(bvec[i], bits), Q) / sb;
    const Real d = fa - fb;
    ssd += d * d;
    for (const Real* f : {&fa, &fb}) {
      if (!have || *f < m) m = *f;
      if (!have || *f > M) M = *f;
      have = true;
    }
  }
  const Real A = C * ssd / (two * P * Q);
  return pack(A / M, C - sab, A / m, tol);
}

ScalarSandwich hp_cauchy(std::span<const double> avec,
                         std::span<const double> bvec, int bits,
                         const Tolerance& tol) {
  if (avec.empty() || avec.size() != bvec.size())
    throw DomainError("vector size mismatch");
  Real aa(bits), bb(bits), ab(bits);
  for (std::size_t i = 0; i < avec.size(); ++i) {
    const Real a(avec[i], bits), b(bvec[i], bits);
    aa += a * a;
    bb += b * b;
    ab += a * b;
  }
  Real ssd(bits), m(bits), M(bits);
  bool have = false;
  for (std::size_t i = 0; i < avec.size(); ++i) {
    const Real fa = Real(avec[i], bits) * Real(avec[i], bits) / aa;
    const Real fb = Real(bvec[i], bits) * Real(bvec[i], bits) / bb;
    const Real d = fa - fb;
    ssd += d * d;
    for (const Real* f : {&fa, &fb}) {
      if (!have || *f < m) m = *f;
      if (!have || *f > M) M = *f;
      have = true;
    }
  }
  const Real A = sqrt(aa * bb) * ssd / Real(8.0, bits);
  const Real lo = A * A / (M * M) + Real(2.0, bits) * A / M * ab;
  const Real up = A * A / (m * m) + Real(2.0, bits) * A / m * ab;
  return pack(lo, aa * bb - ab * ab, up, tol);
}

ScalarSandwich hp_bergstrom(std::span<const double> xvec,
                            std::span<const double> avec, int bits,
                            const Tolerance& tol) {
  if (xvec.empty() || xvec.size() != avec.size())
    throw DomainError("vector size mismatch");
  if (std::all_of(xvec.begin(), xvec.end(), [](double v) { return v == 0; }))
    return ScalarSandwich::zero();
  Real S(bits), Sa(bits), Sabs(bits);
  for (std::size_t i = 0; i < xvec.size(); ++i) {
    const Real x(xvec[i], bits), a(avec[i], bits);
    S += x * x / a;
    Sa += a;
    Sabs += abs(x);
  }
  Real ssd(bits), m(bits), M(bits);
  bool have = false;
  for (std::size_t i = 0; i < xvec.size(); ++i) {
    const Real x(xvec[i], bits), a(avec[i], bits);
    const Real fx = x * x / a / S;
    const Real fa = a / Sa;
    const Real d = fx - fa;
    ssd += d * d;
    for (const Real* f : {&fx, &fa}) {
      if (!have || *f < m) m = *f;
      if (!have || *f > M) M = *f;
      have = true;
    }
  }
  const Real A = sqrt(S * Sa) * ssd / Real(8.0, bits);
  const Real mid = S - Sabs * Sabs / Sa;
  const Real lo = (A * A / (M * M) + Real(2.0, bits) * A / M * Sabs) / Sa;
  const Real up = (A * A / (m * m) + Real(2.0, bits) * A / m * Sabs) / Sa;
  return pack(lo, mid, up, tol);
}

ScalarSandwich hp_divisor_mean(uint64_t n, double k, bool unitary,
                               DivisorVariant variant, BigMChoice big_m,
                               int bits, const Tolerance& tol) {
  if (n == 0) throw DomainError("n must be positive");
  if (!(k >= 0)) throw DomainError("k must be nonnegative");
  std::vector<uint64_t> divs = brute_divisors(n);
  if (unitary) {
    std::erase_if(divs, [n](uint64_t d) { return std::gcd(d, n / d) != 1; });
  }
  const Real K(k, bits);
  const Real tau(static_cast<double>(divs.size()), bits);
  Real sk(bits), s2k(bits);
  for (uint64_t d : divs) {
    const Real dr = Real::from_u64(d, bits);
    const Real dk = pow(dr, K);
    sk += dk;
    s2k += dk * dk;
  }
  const Real nk = pow(Real::from_u64(n, bits), K);
  const Real mean = sk / tau;
  const Real mid = mean - sqrt(nk);
  const Real bracket = variant == DivisorVariant::proof_corrected
                           ? s2k - sk * sk / tau
                           : s2k - mean * mean;
  const Real two(2.0, bits);
  const Real lo_den = big_m == BigMChoice::n_to_k
                          ? two * nk * tau
                          : two * Real::from_u64(n, bits) * tau;
  return pack(bracket / lo_den, mid, bracket / (two * tau), tol);
}

double hp_young_gap(double a, double b, double lambda, int bits) {
  const Real A(a, bits), B(b, bits), L(lambda, bits), one(1.0, bits);
  return (L * A + (one - L) * B - pow(A, L) * pow(B, one - L)).to_double();
}

HpTightness hp_tightness(double a, double b, double lambda, int bits) {
  const Real A(a, bits), B(b, bits), L(lambda, bits), one(1.0, bits);
  const Real coef = L * (one - L) * (A - B) * (A - B);
  const Real m(std::min(a, b), bits), M(std::max(a, b), bits);
  const Real gm = pow(A, L) * pow(B, one - L);
  const Real lg = log(A / B);
  HpTightness t;
  t.cf_upper = (coef / (Real(2.0, bits) * m)).to_double();
  t.exp_upper = (gm * expm1(coef / (m * m))).to_double();
  t.log_upper = (L * (one - L) * lg * lg * M).to_double();
  return t;
}

double hp_power_mean_value(std::span<const double> values,
                           std::span<const double> weights, double r, int bits) {
  const Real R(r, bits);
  Real den(bits), num(bits);
  for (std::size_t i = 0; i < values.size(); ++i) {
    den += Real(weights[i], bits);
    num += Real(weights[i], bits) * pow(Real(values[i], bits), R);
  }
  return pow(num / den, Real(1.0, bits) / R).to_double();
}

double hp_sum(std::span<const double> x, int bits) {
  Real acc(bits);
  for (double v : x) acc += Real(v, bits);
  return acc.to_double();
}

double hp_dot(std::span<const double> x, std::span<const double> y, int bits) {
  Real acc(bits);
  for (std::size_t i = 0; i < x.size(); ++i)
    acc += Real(x[i], bits) * Real(y[i], bits);
  return acc.to_double();
}

std::vector<uint64_t> brute_divisors(uint64_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n > 10'000'000ULL) throw DomainError("brute enumeration capped at 1e7");
  std::vector<uint64_t> divs;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

ScalarSandwich hp_sandwich(const Request& req, int bits, const Tolerance& tol) {
  switch (req.kind) {
    case Kind::cf_two:
      return hp_cf_two(req.a, req.b, req.lambda, bits, tol);
    case Kind::cf_n:
      return hp_cf_n(req.xs, req.ws, bits, tol);
    case Kind::bernoulli:
      return hp_bernoulli(req.x, req.lambda, bits, tol);
    case Kind::power_mean:
      return hp_power_mean(req.xs, req.ws, req.r, req.s, bits, tol);
    case Kind::holder:
      return hp_holder(req.xs, req.ws, req.p, req.q, bits, tol);
    case Kind::cauchy:
      return hp_cauchy(req.xs, req.ws, bits, tol);
    case Kind::bergstrom:
      return hp_bergstrom(req.xs, req.ws, bits, tol);
    case Kind::divisor_mean:
      return hp_divisor_mean(req.n, req.k, req.unitary, req.variant, req.big_m,
                             bits, tol);
  }
  throw DomainError("unknown oracle kind");
}

std::vector<Fixture> builtin_fixtures(int bits) {
  std::vector<Request> reqs;
  {
    Request r;
    r.kind = Kind::cf_two;
    r.a = 4, r.b = 1, r.lambda = 0.5;
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::cf_n;
    r.xs = {1, 4};
    r.ws = {0.5, 0.5};
    reqs.push_back(r);
    r.xs = {1, 2, 4};
    r.ws = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::bernoulli;
    r.x = 3, r.lambda = 0.5;
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::power_mean;
    r.xs = {1, 2};
    r.ws = {1, 1};
    r.r = 1, r.s = 2;
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::holder;
    r.xs = {1, 2};
    r.ws = {2, 1};
    r.p = 2, r.q = 2;
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::cauchy;
    r.xs = {1, 2};
    r.ws = {2, 1};
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::bergstrom;
    r.xs = {1, 2};
    r.ws = {1, 1};
    reqs.push_back(r);
  }
  {
    Request r;
    r.kind = Kind::divisor_mean;
    r.n = 6, r.k = 1;
    reqs.push_back(r);
    r.variant = DivisorVariant::as_printed;
    r.big_m = BigMChoice::n_as_printed;
    reqs.push_back(r);
  }
  std::vector<Fixture> out;
  out.reserve(reqs.size());
  for (const Request& r : reqs)
    out.push_back(Fixture{r, hp_sandwich(r, bits), bits});
  return out;
}

std::string fixture_json(const Fixture& f) {
  JsonWriter inputs;
  const Request& r = f.request;
  switch (r.kind) {
    case Kind::cf_two:
      inputs.field("a", r.a).field("b", r.b).field("lambda", r.lambda);
      break;
    case Kind::cf_n:
      inputs.raw("points", json_array(r.xs)).raw("weights", json_array(r.ws));
      break;
    case Kind::bernoulli:
      inputs.field("x", r.x).field("lambda", r.lambda);
      break;
    case Kind::power_mean:
      inputs.raw("values", json_array(r.xs))
          .raw("weights", json_array(r.ws))
          .field("r", r.r)
          .field("s", r.s);
      break;
    case Kind::holder:
      inputs.raw("avec", json_array(r.xs))
          .raw("bvec", json_array(r.ws))
          .field("p", r.p)
          .field("q", r.q);
      break;
    case Kind::cauchy:
      inputs.raw("avec", json_array(r.xs)).raw("bvec", json_array(r.ws));
      break;
    case Kind::bergstrom:
      inputs.raw("xvec", json_array(r.xs)).raw("avec", json_array(r.ws));
      break;
    case Kind::divisor_mean:
      inputs.field("n", r.n)
          .field("k", r.k)
          .field("unitary", r.unitary)
          .field("variant", to_string(r.variant))
          .field("big_m", to_string(r.big_m));
      break;
  }
  JsonWriter w;
  w.field("kind", to_string(r.kind))
      .raw("inputs", inputs.str())
      .field("lower", f.sandwich.lower)
      .field("middle", f.sandwich.middle)
      .field("upper", f.sandwich.upper)
      .field("precision_bits", f.precision_bits);
  return w.str();
}

}  // namespace cfineq::oracle
