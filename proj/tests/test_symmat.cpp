#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cfineq/errors.hpp"
#include "cfineq/rng.hpp"
#include "cfineq/scalar_cf.hpp"
#include "cfineq/symmat.hpp"
#include "cfineq/verify.hpp"

using namespace cfineq;

namespace {

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace

TEST_CASE("construction and symmetrization") {
  const SymMatrix id = SymMatrix::identity(3);
  CHECK(id(0, 0) == 1.0);
  CHECK(id(0, 1) == 0.0);

  const SymMatrix d = SymMatrix::diag(std::vector<double>{3, 1, 2});
  CHECK(d(1, 1) == 1.0);

  const SymMatrix f = SymMatrix::from_rows({{0, 1}, {0, 0}});
  CHECK(f(0, 1) == 0.5);
  CHECK(f(1, 0) == 0.5);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}}), DomainError);
  CHECK_THROWS_AS(SymMatrix::from_rows({}), DomainError);

  SymMatrix m(2);
  m.set(0, 1, 7.0);
  CHECK(m(1, 0) == 7.0);  // mirrored write
}

TEST_CASE("jacobi on easy spectra") {
  const EigenDecomposition id = jacobi_eigh(SymMatrix::identity(4));
  for (double e : id.eigenvalues) CHECK(e == 1.0);

  const EigenDecomposition d =
      jacobi_eigh(SymMatrix::diag(std::vector<double>{3, 1, 2}));
  CHECK(d.eigenvalues == std::vector<double>{1, 2, 3});

  SymMatrix s(2);
  s.set(0, 0, 2);
  s.set(1, 1, 2);
  s.set(0, 1, 1);
  const EigenDecomposition e = jacobi_eigh(s);
  CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));

  const EigenDecomposition one =
      jacobi_eigh(SymMatrix::diag(std::vector<double>{-5}));
  CHECK(one.eigenvalues[0] == -5.0);
  CHECK(one.basis[0] == 1.0);
}

TEST_CASE("jacobi invariants on random and ill-conditioned matrices") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const int dim = 1 + static_cast<int>(rng.uniform_index(16));
    const SymMatrix s = random_symmetric(rng, dim, rng.log_uniform(1e-2, 1e2));
    const EigenDecomposition ed = jacobi_eigh(s);
    CHECK((rebuild(ed, ed.eigenvalues) - s).frobenius() <=
          1e-12 * s.frobenius());
    for (std::size_t i = 1; i < ed.eigenvalues.size(); ++i)
      CHECK(ed.eigenvalues[i - 1] <= ed.eigenvalues[i]);
  }

  SymMatrix hilbert(8);  // classic near-singular case
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) hilbert.set(i, j, 1.0 / (i + j + 1));
  const EigenDecomposition ed = jacobi_eigh(hilbert);
  CHECK((rebuild(ed, ed.eigenvalues) - hilbert).frobenius() <=
        1e-12 * hilbert.frobenius());
}

TEST_CASE("spd_power") {
  Rng rng(23);
  const SymMatrix s = random_spd(rng, 5, 0.1, 10.0);

  CHECK(max_abs_diff(spd_power(s, 1.0), s) <= 1e-12 * s.frobenius());

  const SymMatrix half = spd_power(s, 0.5);
  // S^{1/2} * I * S^{1/2} recovers S, and so does squaring via spd_power
  CHECK(max_abs_diff(congruence(half, SymMatrix::identity(5)), s) <=
        1e-11 * s.frobenius());
  const SymMatrix sq = spd_power(half, 2.0);
  CHECK(max_abs_diff(sq, s) <= 1e-11 * s.frobenius());

  const SymMatrix inv = spd_power(SymMatrix::diag(std::vector<double>{4, 9}), -1.0);
  CHECK(inv(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(inv(1, 1) == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(inv(0, 1) == 0.0);

  for (double t : {-1.0, 0.5, 2.0}) {
    const SymMatrix roundtrip = spd_power(spd_power(s, t), 1.0 / t);
    CHECK((roundtrip - s).frobenius() <= 1e-10 * s.frobenius());
  }

  CHECK_THROWS_AS(spd_power(SymMatrix::diag(std::vector<double>{1, -1}), 0.5),
                  NotPositiveDefinite);
  CHECK_THROWS_AS(spd_power(SymMatrix::diag(std::vector<double>{1, 0}), 0.5),
                  NotPositiveDefinite);
}

TEST_CASE("geometric mean") {
  Rng rng(29);
  const SymMatrix A = random_spd(rng, 4, 0.1, 10.0);
  const SymMatrix B = random_spd(rng, 4, 0.1, 10.0);

  CHECK(geometric_mean(A, B, 0.0) == A);
  CHECK(geometric_mean(A, B, 1.0) == B);
  CHECK(geometric_mean(A, A, 0.37) == A);

  const SymMatrix g = geometric_mean(
      SymMatrix::diag(std::vector<double>{1, 4}),
      SymMatrix::diag(std::vector<double>{9, 1}), 0.5);
  CHECK(g(0, 0) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(g(1, 1) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::abs(g(0, 1)) <= 1e-13);

  // B #_{1-lambda} A = A #_lambda B
  for (double lam : {0.2, 0.5, 0.8}) {
    const SymMatrix lhs = geometric_mean(B, A, 1.0 - lam);
    const SymMatrix rhs = geometric_mean(A, B, lam);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-11 * (1.0 + rhs.frobenius()));
  }

  CHECK_THROWS_AS(
      geometric_mean(A, SymMatrix::identity(3), 0.5), DimensionMismatch);
  CHECK_THROWS_AS(geometric_mean(A, B, 1.5), DomainError);
  CHECK_THROWS_AS(
      geometric_mean(SymMatrix::diag(std::vector<double>{1, -1}), B, 0.5),
      NotPositiveDefinite);
}

TEST_CASE("geometric mean trace is monotone between ordered commuting pairs") {
  Rng rng(31);
  std::vector<double> lo(5), hi(5);
  for (int i = 0; i < 5; ++i) {
    lo[i] = rng.log_uniform(0.1, 2.0);
    hi[i] = lo[i] + rng.log_uniform(0.1, 5.0);
  }
  const SymMatrix A = SymMatrix::diag(lo);
  const SymMatrix B = SymMatrix::diag(hi);
  double prev = geometric_mean(A, B, 0.0).trace();
  for (double lam : {0.25, 0.5, 0.75, 1.0}) {
    const double cur = geometric_mean(A, B, lam).trace();
    CHECK(cur >= prev - 1e-12 * (1.0 + std::abs(cur)));
    prev = cur;
  }
}

TEST_CASE("harmonic mean") {
  Rng rng(37);
  const SymMatrix A = random_spd(rng, 3, 0.1, 10.0);
  const SymMatrix B = random_spd(rng, 3, 0.1, 10.0);
  CHECK(harmonic_mean(A, A, 0.4) == A);
  CHECK(harmonic_mean(A, B, 0.0) == A);
  CHECK(harmonic_mean(A, B, 1.0) == B);

  const SymMatrix h = harmonic_mean(SymMatrix::diag(std::vector<double>{1}),
                                    SymMatrix::diag(std::vector<double>{4}), 0.5);
  CHECK(h(0, 0) == doctest::Approx(1.6).epsilon(1e-14));
}

TEST_CASE("loewner comparison") {
  const SymMatrix a = SymMatrix::diag(std::vector<double>{1, 1});
  CHECK(loewner_cmp(a, a).relation == Relation::EQUAL);
  CHECK(loewner_cmp(a, SymMatrix::diag(std::vector<double>{2, 3})).relation ==
        Relation::LEQ);
  CHECK(loewner_cmp(SymMatrix::diag(std::vector<double>{2, 3}), a).relation ==
        Relation::GEQ);
  const LoewnerVerdict v = loewner_cmp(SymMatrix::diag(std::vector<double>{1, 3}),
                                       SymMatrix::diag(std::vector<double>{2, 1}));
  CHECK(v.relation == Relation::INCOMPARABLE);
  CHECK(v.min_eig_B_minus_A == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(v.min_eig_A_minus_B == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(loewner_cmp(a, SymMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("1x1 operations match their scalar counterparts") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const double a = rng.log_uniform(1e-3, 1e3);
    const double b = rng.log_uniform(1e-3, 1e3);
    const double lam = rng.next_unit();
    const SymMatrix A = SymMatrix::diag(std::vector<double>{a});
    const SymMatrix B = SymMatrix::diag(std::vector<double>{b});
    CHECK(geometric_mean(A, B, lam)(0, 0) ==
          doctest::Approx(a * exp_log_pow(b / a, lam)).epsilon(1e-12));
    CHECK(harmonic_mean(A, B, lam)(0, 0) ==
          doctest::Approx(1.0 / ((1.0 - lam) / a + lam / b)).epsilon(1e-12));
    CHECK(spd_power(A, 0.7)(0, 0) ==
          doctest::Approx(exp_log_pow(a, 0.7)).epsilon(1e-13));
    const Relation want = a < b    ? Relation::LEQ
                          : a > b  ? Relation::GEQ
                                   : Relation::EQUAL;
    CHECK(loewner_cmp(A, B).relation == want);
  }
}
