#include "rinv/barrier.hpp"

#include <cmath>
#include <string>

#include "rinv/errors.hpp"

namespace rinv {

namespace {

// Shared precondition for the step checks: delta in (0, b - delta],
// and every eigenvalue of A either numerically zero or above b.
void require_step_preconditions(const SymMatrix& a, double b, double delta, double tol_sep) {
  if (!(delta > 0.0)) throw PreconditionError("delta must be positive, got " + std::to_string(delta));
  const double bprime = b - delta;
  if (!(bprime >= delta))
    throw PreconditionError("lowered barrier b - delta = " + std::to_string(bprime) +
                            " must be at least delta = " + std::to_string(delta));
  const EigenDecomp ed = sym_eigen(a);
  for (double lambda : ed.eigenvalues) {
    if (lambda <= tol_sep) continue;  // kernel of A
    if (lambda <= b + tol_sep)
      throw PreconditionError("nonzero eigenvalue " + std::to_string(lambda) +
                              " does not exceed the barrier " + std::to_string(b));
  }
}

double symmetric_trace_product(const SymMatrix& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) sum += g(i, j) * g(i, j);
  return sum;
}

}  // namespace

PotentialReport potential(const ColumnSet& u, const SymMatrix& a, double b, double tol_sep) {
  if (u.dim() != a.dim())
    throw DimensionError("potential: column dimension does not match matrix dimension");
  const SymMatrix m = shifted_inverse(a, b, tol_sep);
  PotentialReport report{0.0, b, std::vector<double>(u.count(), 0.0)};
  for (std::size_t j = 0; j < u.count(); ++j) {
    report.per_column[j] = quad_form(m, u.column(j));
    report.value += report.per_column[j];
  }
  return report;
}

double check_step1(const SymMatrix& a, double b, double delta, double tol_sep) {
  require_step_preconditions(a, b, delta, tol_sep);
  const double bprime = b - delta;
  const SymMatrix m_b = shifted_inverse(a, b, tol_sep);
  const SymMatrix m_bp = shifted_inverse(a, bprime, tol_sep);
  const SymMatrix diff =
      subtract(subtract(m_b, m_bp), scale(multiply_sym(m_bp, m_bp), 0.5 * delta));
  return sym_eigen(diff).eigenvalues.front();
}

StepPotentials check_step2(const ColumnSet& u, const SymMatrix& a, double b, double delta,
                           double tol_sep) {
  require_step_preconditions(a, b, delta, tol_sep);
  return StepPotentials{potential(u, a, b, tol_sep).value,
                        potential(u, a, b - delta, tol_sep).value};
}

Step3Bound check_step3(const ColumnSet& u, const SymMatrix& a, double b, double delta,
                       double tol_sep) {
  require_step_preconditions(a, b, delta, tol_sep);
  const double bprime = b - delta;
  const double n = static_cast<double>(u.count());

  const SymMatrix m_bp = shifted_inverse(a, bprime, tol_sep);
  const Matrix um = u.to_matrix();
  const Matrix g2 = multiply(transpose(um), multiply(m_bp.to_matrix(), um));
  const SymMatrix g2s = SymMatrix::from_matrix(g2);

  double phi_bprime = 0.0;
  for (std::size_t i = 0; i < g2s.dim(); ++i) phi_bprime += g2s(i, i);

  const double bound = -n - 2.0 * op_norm_sq(u) / delta;
  if (phi_bprime > bound + kHypothesisSlack)
    throw PreconditionError("potential " + std::to_string(phi_bprime) +
                            " at the lowered barrier exceeds the hypothesis bound " +
                            std::to_string(bound));

  const double phi_b = potential(u, a, b, tol_sep).value;
  return Step3Bound{symmetric_trace_product(g2s), (phi_b - phi_bprime) * (-n - phi_bprime)};
}

}  // namespace rinv
