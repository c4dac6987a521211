#pragma once

#include <cstddef>
#include <vector>

#include "rinv/column_set.hpp"
#include "rinv/matrix.hpp"

namespace rinv {

// Minimum allowed distance between an eigenvalue and a barrier (or a
// Sherman-Morrison denominator and zero) before the operation refuses.
inline constexpr double kDefaultTolSep = 1e-8;

// Spectral factorization S = Q diag(eigenvalues) Q^T with eigenvalues
// ascending and Q orthonormal (columns are eigenvectors).
struct EigenDecomp {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

// Cyclic Jacobi eigendecomposition. Sweeps until every off-diagonal
// entry is below 1e-12 * ||S||_F, capped at 100 sweeps; throws
// ConvergenceError at the cap.
EigenDecomp sym_eigen(const SymMatrix& s);

// (A - bI)^{-1} via the eigendecomposition. Every eigenvalue of A must
// stay at least tol_sep away from b; otherwise BarrierCollisionError.
SymMatrix shifted_inverse(const SymMatrix& a, double b, double tol_sep = kDefaultTolSep);

// u^T M u.
double quad_form(const SymMatrix& m, std::span<const double> u);

// Largest eigenvalue of U U^T, i.e. the squared operator norm of the
// synthesis operator of the column system.
double op_norm_sq(const ColumnSet& u);

// M - (M w w^T M) / (1 + w^T M w). When M = (A - b'I)^{-1} this is
// (A + ww^T - b'I)^{-1}. Throws SingularUpdateError when |1 + w^T M w|
// <= tol_sep.
SymMatrix sherman_morrison_update(const SymMatrix& m, std::span<const double> w,
                                  double tol_sep = kDefaultTolSep);

// k-by-k Gram matrix of the columns listed in s: G[a][b] = u_{s[a]} . u_{s[b]}.
// Indices must be distinct and in range.
SymMatrix gram(const ColumnSet& u, std::span<const std::size_t> s);

}  // namespace rinv
