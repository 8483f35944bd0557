#pragma once

#include "cfineq/symmat.hpp"

namespace cfineq {

enum class CaseTag { A_leq_B, B_leq_A };

const char* to_string(CaseTag t);

/// Matrix analogue of the scalar sandwich: lower <= middle <= upper in the
/// Loewner order, with the comparison evidence recorded.
struct OperatorSandwich {
  SymMatrix lower;
  SymMatrix middle;
  SymMatrix upper;
  LoewnerVerdict lower_verdict;  // lower vs middle
  LoewnerVerdict upper_verdict;  // middle vs upper
  CaseTag case_tag = CaseTag::A_leq_B;

  bool pass() const { return lower_verdict.leq() && upper_verdict.leq(); }
};

/// Sandwich of (1-lambda)A + lambda B - A#_lambda B between
/// lambda(1-lambda)/2 times AB^{-1}A - 2A + B and BA^{-1}B - 2B + A, the
/// roles of the two bound matrices set by which of A <= B / B <= A holds.
OperatorSandwich theorem41_sandwich(const SymMatrix& A, const SymMatrix& B,
                                    double lambda);

/// AB^{-1}A - 2A + B and BA^{-1}B - 2B + A are PSD for every PD pair:
/// both are congruences of u + 1/u - 2 = (u-1)^2/u >= 0.
struct PsdTermsReport {
  SymMatrix t1;  // AB^{-1}A - 2A + B
  SymMatrix t2;  // BA^{-1}B - 2B + A
  double min_eig_t1 = 0.0;
  double min_eig_t2 = 0.0;
  double tol_used = 0.0;
  bool both_psd = false;
};

PsdTermsReport remark41_psd_terms(const SymMatrix& A, const SymMatrix& B);

/// Harmonic <= geometric <= arithmetic operator mean chain.
struct ChainReport {
  LoewnerVerdict hm_leq_gm;
  LoewnerVerdict gm_leq_am;

  bool pass() const { return hm_leq_gm.leq() && gm_leq_am.leq(); }
};

ChainReport amghm_chain_check(const SymMatrix& A, const SymMatrix& B,
                              double lambda);

/// Sandwich of the harmonic mean between the two corrected expressions
/// G - G {(2/(lambda(1-lambda))) Z^{-1} + G}^{-1} G with G = A#_lambda B and
/// Z one of A^{-1}BA^{-1} - 2A^{-1} + B^{-1} (A side) or the B side swap.
/// Which side supplies the lower bound is decided by evaluating both
/// Loewner verdicts, not assumed.
struct Corollary42Result {
  OperatorSandwich sandwich;  // middle is the harmonic mean
  bool lower_uses_a_side = true;
};

Corollary42Result corollary42_sandwich(const SymMatrix& A, const SymMatrix& B,
                                       double lambda);

/// 3(A - B) + BA^{-1}B - AB^{-1}A, PSD whenever 0 < A <= B; the 1x1 case is
/// (b-a)^3/(ab).
struct Corollary43Report {
  SymMatrix expr;
  double min_eig = 0.0;
  double tol_used = 0.0;
  bool psd = false;
};

Corollary43Report corollary43_check(const SymMatrix& A, const SymMatrix& B);

}  // namespace cfineq
