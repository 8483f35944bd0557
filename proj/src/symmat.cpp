#include "cfineq/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cfineq/scalar_cf.hpp"

namespace cfineq {
namespace {

constexpr double kJacobiRelTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kPdFloorRel = 1e-12;
constexpr double kPsdTolRel = 1e-10;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
  if (dim <= 0) throw DomainError("matrix dimension must be positive");
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diag(std::span<const double> d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[i]);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw DomainError("matrix must be nonempty");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw DomainError("matrix must be square");
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
  return m;
}

double SymMatrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += a_[i * dim_ + i];
  return s;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("matrix dimensions differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatch("matrix dimensions differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double c) {
  for (double& v : a_) v *= c;
  return *this;
}

SymMatrix congruence(const SymMatrix& X, const SymMatrix& S) {
  const int n = X.dim();
  if (n != S.dim()) throw DimensionMismatch("matrix dimensions differ");
  // T = X * S, then R = T * X, symmetrized
  std::vector<double> t(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double xik = X(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < n; ++j) t[i * n + j] += xik * S(k, j);
    }
  SymMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double rij = 0.0;
      double rji = 0.0;
      for (int k = 0; k < n; ++k) {
        rij += t[i * n + k] * X(k, j);
        rji += t[j * n + k] * X(k, i);
      }
      r.set(i, j, 0.5 * (rij + rji));
    }
  return r;
}

double EigenDecomposition::spectral_radius() const {
  return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

EigenDecomposition jacobi_eigh(const SymMatrix& S) {
  const int n = S.dim();
  EigenDecomposition ed;
  ed.dim = n;
  ed.eigenvalues.resize(n);
  ed.basis.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> a = S.data();
  std::vector<double>& q = ed.basis;
  for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

  const double target = kJacobiRelTol * S.frobenius();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = a[p * n + r];
        if (apr == 0.0) continue;
        const double theta = (a[r * n + r] - a[p * n + p]) / (2.0 * apr);
        // smaller-magnitude root of t^2 + 2 theta t - 1 = 0
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] -= t * apr;
        a[r * n + r] += t * apr;
        a[p * n + r] = 0.0;
        a[r * n + p] = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == r) continue;
          const double aip = a[i * n + p];
          const double air = a[i * n + r];
          a[i * n + p] = aip - s * (air + tau * aip);
          a[p * n + i] = a[i * n + p];
          a[i * n + r] = air + s * (aip - tau * air);
          a[r * n + i] = a[i * n + r];
        }
        for (int i = 0; i < n; ++i) {
          const double qip = q[i * n + p];
          const double qir = q[i * n + r];
          q[i * n + p] = qip - s * (qir + tau * qip);
          q[i * n + r] = qir + s * (qip - tau * qir);
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a, n) > target)
    throw ConvergenceError("Jacobi sweeps did not reduce the off-diagonal norm");

  // ascending eigenvalues, basis columns permuted alongside
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
  std::vector<double> sorted_q(q.size());
  for (int j = 0; j < n; ++j) {
    ed.eigenvalues[j] = a[order[j] * n + order[j]];
    for (int i = 0; i < n; ++i) sorted_q[i * n + j] = q[i * n + order[j]];
  }
  ed.basis = std::move(sorted_q);
  return ed;
}

SymMatrix rebuild(const EigenDecomposition& ed,
                  std::span<const double> eigenvalues) {
  const int n = ed.dim;
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += ed.basis[i * n + k] * eigenvalues[k] * ed.basis[j * n + k];
      m.set(i, j, s);
    }
  return m;
}

double pd_floor(const EigenDecomposition& ed) {
  return kPdFloorRel * (1.0 + ed.spectral_radius());
}

EigenDecomposition eigh_pd(const SymMatrix& S) {
  EigenDecomposition ed = jacobi_eigh(S);
  if (ed.eig_min() <= pd_floor(ed))
    throw NotPositiveDefinite("matrix is not positive definite");
  return ed;
}

SymMatrix spd_power(const SymMatrix& S, double t) {
  const EigenDecomposition ed = eigh_pd(S);
  std::vector<double> powed(ed.eigenvalues.size());
  for (std::size_t i = 0; i < powed.size(); ++i)
    powed[i] = exp_log_pow(ed.eigenvalues[i], t);
  return rebuild(ed, powed);
}

SymMatrix geometric_mean(const SymMatrix& A, const SymMatrix& B,
                         double lambda) {
  if (A.dim() != B.dim()) throw DimensionMismatch("matrix dimensions differ");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0, 1]");
  const EigenDecomposition eda = eigh_pd(A);
  eigh_pd(B);
  if (lambda == 0.0) return A;
  if (lambda == 1.0) return B;
  if (A == B) return A;

  std::vector<double> half(eda.eigenvalues.size());
  std::vector<double> minus_half(eda.eigenvalues.size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    half[i] = std::sqrt(eda.eigenvalues[i]);
    minus_half[i] = 1.0 / half[i];
  }
  const SymMatrix root = rebuild(eda, half);
  const SymMatrix inv_root = rebuild(eda, minus_half);
  const SymMatrix inner = congruence(inv_root, B);
  return congruence(root, spd_power(inner, lambda));
}

SymMatrix harmonic_mean(const SymMatrix& A, const SymMatrix& B, double lambda) {
  if (A.dim() != B.dim()) throw DimensionMismatch("matrix dimensions differ");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("lambda must lie in [0, 1]");
  const EigenDecomposition eda = eigh_pd(A);
  const EigenDecomposition edb = eigh_pd(B);
  if (lambda == 0.0) return A;
  if (lambda == 1.0) return B;
  if (A == B) return A;

  std::vector<double> inv(eda.eigenvalues.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / eda.eigenvalues[i];
  SymMatrix mix = rebuild(eda, inv);
  mix *= 1.0 - lambda;
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / edb.eigenvalues[i];
  SymMatrix binv = rebuild(edb, inv);
  binv *= lambda;
  mix += binv;
  return spd_power(mix, -1.0);
}

double spectral_radius(const SymMatrix& S) {
  return jacobi_eigh(S).spectral_radius();
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LEQ: return "LEQ";
    case Relation::GEQ: return "GEQ";
    case Relation::EQUAL: return "EQUAL";
    case Relation::INCOMPARABLE: return "INCOMPARABLE";
  }
  return "?";
}

LoewnerVerdict loewner_cmp(const SymMatrix& A, const SymMatrix& B) {
  if (A.dim() != B.dim()) throw DimensionMismatch("matrix dimensions differ");
  const EigenDecomposition edd = jacobi_eigh(B - A);
  LoewnerVerdict v;
  v.min_eig_B_minus_A = edd.eig_min();
  v.min_eig_A_minus_B = -edd.eig_max();
  v.tol_used =
      kPsdTolRel * (1.0 + std::max(spectral_radius(A), spectral_radius(B)));
  const bool leq = v.min_eig_B_minus_A >= -v.tol_used;
  const bool geq = v.min_eig_A_minus_B >= -v.tol_used;
  v.relation = leq && geq  ? Relation::EQUAL
               : leq       ? Relation::LEQ
               : geq       ? Relation::GEQ
                           : Relation::INCOMPARABLE;
  return v;
}

}  // namespace cfineq
