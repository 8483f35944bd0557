#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cfineq/errors.hpp"
#include "cfineq/operator_ineq.hpp"
#include "cfineq/rng.hpp"
#include "cfineq/scalar_cf.hpp"
#include "cfineq/verify.hpp"

using namespace cfineq;

namespace {

SymMatrix d1(double v) { return SymMatrix::diag(std::vector<double>{v}); }

}  // namespace

TEST_CASE("theorem41: equal operators give zero matrices") {
  const SymMatrix A = SymMatrix::diag(std::vector<double>{2, 3});
  const OperatorSandwich sw = theorem41_sandwich(A, A, 0.7);
  CHECK(sw.lower.frobenius() == 0.0);
  CHECK(sw.middle.frobenius() == 0.0);
  CHECK(sw.upper.frobenius() == 0.0);
  CHECK(sw.lower_verdict.relation == Relation::EQUAL);
  CHECK(sw.upper_verdict.relation == Relation::EQUAL);
}

TEST_CASE("theorem41: 1x1 matches the scalar sandwich after the weight swap") {
  const OperatorSandwich sw = theorem41_sandwich(d1(1), d1(4), 0.5);
  CHECK(sw.case_tag == CaseTag::A_leq_B);
  CHECK(sw.lower(0, 0) == doctest::Approx(0.28125).epsilon(1e-13));
  CHECK(sw.middle(0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(sw.upper(0, 0) == doctest::Approx(1.125).epsilon(1e-13));
  CHECK(sw.pass());

  // boundary weights collapse everything to zero exactly
  for (double lam : {0.0, 1.0}) {
    const OperatorSandwich z = theorem41_sandwich(d1(1), d1(4), lam);
    CHECK(z.lower.frobenius() == 0.0);
    CHECK(z.middle.frobenius() == 0.0);
    CHECK(z.upper.frobenius() == 0.0);
  }
}

TEST_CASE("theorem41: commuting case reduces per eigenvalue") {
  const SymMatrix A = SymMatrix::diag(std::vector<double>{1, 2});
  const SymMatrix B = SymMatrix::diag(std::vector<double>{4, 3});
  const double lam = 0.3;
  const OperatorSandwich sw = theorem41_sandwich(A, B, lam);
  CHECK(sw.case_tag == CaseTag::A_leq_B);
  const double pairs[2][2] = {{1, 4}, {2, 3}};
  for (int i = 0; i < 2; ++i) {
    const ScalarSandwich ref =
        cf_sandwich_two({pairs[i][0], pairs[i][1], 1.0 - lam});
    CHECK(sw.lower(i, i) == doctest::Approx(ref.lower).epsilon(1e-12));
    CHECK(sw.middle(i, i) == doctest::Approx(ref.middle).epsilon(1e-12));
    CHECK(sw.upper(i, i) == doctest::Approx(ref.upper).epsilon(1e-12));
  }
  CHECK(std::abs(sw.middle(0, 1)) <= 1e-13);
  CHECK(sw.pass());
}

TEST_CASE("theorem41: case (ii), errors, homogeneity") {
  // B <= A swaps the bound roles
  const OperatorSandwich sw = theorem41_sandwich(d1(4), d1(1), 0.5);
  CHECK(sw.case_tag == CaseTag::B_leq_A);
  CHECK(sw.pass());

  CHECK_THROWS_AS(theorem41_sandwich(SymMatrix::diag(std::vector<double>{1, 3}),
                                     SymMatrix::diag(std::vector<double>{2, 1}),
                                     0.5),
                  OrderingIndeterminate);
  CHECK_THROWS_AS(theorem41_sandwich(d1(1), d1(-1), 0.5), NotPositiveDefinite);
  CHECK_THROWS_AS(theorem41_sandwich(d1(1), d1(4), 1.5), DomainError);
  CHECK_THROWS_AS(
      theorem41_sandwich(d1(1), SymMatrix::identity(2), 0.5),
      DimensionMismatch);

  // all three expressions are degree-1 homogeneous
  Rng rng(7);
  auto [A, B] = random_comparable_pair(rng, 3);
  const double c = 3.7;
  const OperatorSandwich base = theorem41_sandwich(A, B, 0.4);
  const OperatorSandwich scaled = theorem41_sandwich(c * A, c * B, 0.4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(scaled.lower(i, j) ==
            doctest::Approx(c * base.lower(i, j)).epsilon(1e-11));
      CHECK(scaled.middle(i, j) ==
            doctest::Approx(c * base.middle(i, j)).epsilon(1e-11));
      CHECK(scaled.upper(i, j) ==
            doctest::Approx(c * base.upper(i, j)).epsilon(1e-11));
    }
}

TEST_CASE("remark41: the two bound terms are PSD for any PD pair") {
  const PsdTermsReport same = remark41_psd_terms(d1(3), d1(3));
  CHECK(same.both_psd);
  CHECK(std::abs(same.min_eig_t1) <= 1e-13);

  const PsdTermsReport r = remark41_psd_terms(d1(1), d1(4));
  CHECK(r.t1(0, 0) == doctest::Approx(2.25).epsilon(1e-14));
  CHECK(r.t2(0, 0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(r.both_psd);

  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const SymMatrix A = random_spd(rng, 4, 1e-2, 1e2);
    const SymMatrix B = random_spd(rng, 4, 1e-2, 1e2);
    CHECK(remark41_psd_terms(A, B).both_psd);
  }
}

TEST_CASE("mean chain HM <= GM <= AM") {
  const ChainReport same = amghm_chain_check(d1(5), d1(5), 0.3);
  CHECK(same.hm_leq_gm.relation == Relation::EQUAL);
  CHECK(same.gm_leq_am.relation == Relation::EQUAL);

  const ChainReport r = amghm_chain_check(d1(1), d1(4), 0.5);
  CHECK(r.pass());

  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    const SymMatrix A = random_spd(rng, 5, 1e-2, 1e2);
    const SymMatrix B = random_spd(rng, 5, 1e-2, 1e2);
    CHECK(amghm_chain_check(A, B, 0.25).pass());
  }
}

TEST_CASE("corollary42: scalar bracket around the harmonic mean") {
  const Corollary42Result res = corollary42_sandwich(d1(1), d1(4), 0.5);
  CHECK(res.sandwich.middle(0, 0) == doctest::Approx(1.6).epsilon(1e-13));
  // G - G{(2/(lambda(1-lambda))) Z^{-1} + G}^{-1}G at G=2 with the two inner
  // terms 2.25 and 0.5625
  CHECK(res.sandwich.lower(0, 0) == doctest::Approx(1.28).epsilon(1e-12));
  CHECK(res.sandwich.upper(0, 0) ==
        doctest::Approx(1.7534246575342465).epsilon(1e-12));
  CHECK(res.sandwich.pass());
  CHECK(res.lower_uses_a_side);
  CHECK(res.sandwich.case_tag == CaseTag::A_leq_B);

  const Corollary42Result rev = corollary42_sandwich(d1(4), d1(1), 0.5);
  CHECK(rev.sandwich.case_tag == CaseTag::B_leq_A);
  CHECK_FALSE(rev.lower_uses_a_side);
  CHECK(rev.sandwich.middle(0, 0) == doctest::Approx(1.6).epsilon(1e-13));
  CHECK(rev.sandwich.pass());
}

TEST_CASE("corollary42: degeneracies") {
  CHECK_THROWS_AS(corollary42_sandwich(d1(2), d1(2), 0.5), DegenerateInput);
  SymMatrix nearby = d1(2);
  nearby.set(0, 0, 2.0 + 1e-14);
  CHECK_THROWS_AS(corollary42_sandwich(d1(2), nearby, 0.5), DegenerateInput);
  CHECK_THROWS_AS(corollary42_sandwich(d1(1), d1(4), 0.0), DomainError);
  CHECK_THROWS_AS(corollary42_sandwich(d1(1), d1(4), 1.0), DomainError);
  CHECK_THROWS_AS(
      corollary42_sandwich(SymMatrix::diag(std::vector<double>{1, 3}),
                           SymMatrix::diag(std::vector<double>{2, 1}), 0.5),
      OrderingIndeterminate);
}

TEST_CASE("corollary42: random comparable pairs bracket the harmonic mean") {
  Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    auto [A, B] = random_comparable_pair(rng, 3);
    const Corollary42Result res = corollary42_sandwich(A, B, 0.3);
    CHECK(res.sandwich.pass());
    CHECK(res.lower_uses_a_side);  // derived assignment should hold as-is
  }
}

TEST_CASE("corollary43") {
  const Corollary43Report same = corollary43_check(d1(2), d1(2));
  CHECK(same.psd);
  CHECK(std::abs(same.expr(0, 0)) <= 1e-13);

  const Corollary43Report r = corollary43_check(d1(1), d1(2));
  CHECK(r.expr(0, 0) == doctest::Approx(0.5).epsilon(1e-14));  // (b-a)^3/(ab)
  CHECK(r.psd);

  CHECK_THROWS_AS(corollary43_check(d1(2), d1(1)), OrderingIndeterminate);
  CHECK_THROWS_AS(
      corollary43_check(SymMatrix::diag(std::vector<double>{1, 3}),
                        SymMatrix::diag(std::vector<double>{2, 1})),
      OrderingIndeterminate);
  CHECK_THROWS_AS(corollary43_check(d1(-1), d1(1)), NotPositiveDefinite);

  Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    auto [A, B] = random_comparable_pair(rng, 6);
    CHECK(corollary43_check(A, B).psd);
  }
}
