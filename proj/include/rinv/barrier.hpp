#pragma once

#include <vector>

#include "rinv/column_set.hpp"
#include "rinv/matops.hpp"
#include "rinv/matrix.hpp"

namespace rinv {

// Slack allowed on the running potential hypothesis
// phi <= -n - 2*opnorm^2/delta when re-checking it mid-run.
inline constexpr double kHypothesisSlack = 1e-8;

// Potential at barrier b: sum over columns of u_i^T (A - bI)^{-1} u_i,
// together with the per-column terms.
struct PotentialReport {
  double value;
  double barrier;
  std::vector<double> per_column;
};

PotentialReport potential(const ColumnSet& u, const SymMatrix& a, double b,
                          double tol_sep = kDefaultTolSep);

// Potentials at the current barrier b and the lowered barrier b - delta.
struct StepPotentials {
  double phi_b;
  double phi_bprime;
};

// Trace bound pair: lhs = Tr[(U^T M' U)^2] with M' = (A - b'I)^{-1},
// rhs = (phi_b - phi_bprime) * (-n - phi_bprime).
struct Step3Bound {
  double lhs;
  double rhs;
};

// Smallest eigenvalue of (A - bI)^{-1} - (A - b'I)^{-1} - (delta/2)(A - b'I)^{-2}
// with b' = b - delta. Nonnegative whenever delta <= b' and every nonzero
// eigenvalue of A lies above b.
double check_step1(const SymMatrix& a, double b, double delta,
                   double tol_sep = kDefaultTolSep);

// Both potentials; lowering the barrier never increases the potential
// (phi_bprime <= phi_b) when the spectrum stays above b.
StepPotentials check_step2(const ColumnSet& u, const SymMatrix& a, double b, double delta,
                           double tol_sep = kDefaultTolSep);

// The averaging bound used to exhibit a good candidate column. Requires
// additionally phi_bprime <= -n - 2*opnorm^2/delta (within kHypothesisSlack).
Step3Bound check_step3(const ColumnSet& u, const SymMatrix& a, double b, double delta,
                       double tol_sep = kDefaultTolSep);

}  // namespace rinv
