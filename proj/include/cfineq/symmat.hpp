#pragma once

#include <span>
#include <vector>

#include "cfineq/errors.hpp"

namespace cfineq {

/// Dense real symmetric matrix, row-major full storage. Writes mirror across
/// the diagonal, so symmetry is exact by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  static SymMatrix diag(std::span<const double> d);
  /// Builds from a square array of rows, symmetrizing (M + M^T)/2.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[i * dim_ + j]; }
  void set(int i, int j, double v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
  }
  const std::vector<double>& data() const { return a_; }

  double frobenius() const;
  double trace() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double c);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }
  bool operator==(const SymMatrix& o) const = default;

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

/// (X S X + transpose)/2 for symmetric X, S; the symmetrization suppresses
/// asymmetry drift before eigenvalue checks.
SymMatrix congruence(const SymMatrix& X, const SymMatrix& S);

struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> basis;        // row-major Q, column j pairs with eigenvalue j

  double eig_min() const { return eigenvalues.front(); }
  double eig_max() const { return eigenvalues.back(); }
  double spectral_radius() const;
};

/// Cyclic Jacobi sweeps; converged when the off-diagonal Frobenius norm
/// drops below 1e-13 * ||S||_F, at most 100 sweeps. Deterministic.
EigenDecomposition jacobi_eigh(const SymMatrix& S);

/// Q diag(f(lambda)) Q^T, symmetric by construction.
SymMatrix rebuild(const EigenDecomposition& ed, std::span<const double> eigenvalues);

/// Threshold below which an eigenvalue counts as not positive definite:
/// 1e-12 * (1 + max |eigenvalue|).
double pd_floor(const EigenDecomposition& ed);

/// Eigendecomposition that additionally requires S positive definite.
EigenDecomposition eigh_pd(const SymMatrix& S);

/// S^t through the eigendecomposition; NotPositiveDefinite when any
/// eigenvalue is at or below the pd floor.
SymMatrix spd_power(const SymMatrix& S, double t);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^lambda A^{1/2}, the weighted operator
/// geometric mean; lambda 0 and 1 return A and B exactly.
SymMatrix geometric_mean(const SymMatrix& A, const SymMatrix& B, double lambda);

/// ((1-lambda) A^{-1} + lambda B^{-1})^{-1}.
SymMatrix harmonic_mean(const SymMatrix& A, const SymMatrix& B, double lambda);

double spectral_radius(const SymMatrix& S);

enum class Relation { LEQ, GEQ, EQUAL, INCOMPARABLE };

const char* to_string(Relation r);

/// Loewner comparison evidence: the minimum eigenvalues of both difference
/// directions and the tolerance they were judged against,
/// 1e-10 * (1 + max spectral radius of the compared operands).
struct LoewnerVerdict {
  Relation relation = Relation::EQUAL;
  double min_eig_B_minus_A = 0.0;
  double min_eig_A_minus_B = 0.0;
  double tol_used = 0.0;

  bool leq() const { return relation == Relation::LEQ || relation == Relation::EQUAL; }
  bool geq() const { return relation == Relation::GEQ || relation == Relation::EQUAL; }
};

LoewnerVerdict loewner_cmp(const SymMatrix& A, const SymMatrix& B);

}  // namespace cfineq
