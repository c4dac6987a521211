#include "rinv/matops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rinv/errors.hpp"

namespace rinv {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagFactor = 1e-12;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing a(p,q), accumulating the rotation into q_acc.
void jacobi_rotate(Matrix& a, Matrix& q_acc, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double qkp = q_acc(k, p);
    const double qkq = q_acc(k, q);
    q_acc(k, p) = c * qkp - s * qkq;
    q_acc(k, q) = s * qkp + c * qkq;
  }
}

}  // namespace

EigenDecomp sym_eigen(const SymMatrix& s) {
  const std::size_t n = s.dim();
  Matrix a = s.to_matrix();
  Matrix q = Matrix::identity(n);
  const double threshold = kOffDiagFactor * s.frobenius_norm();

  if (n > 1) {
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
      if (sweep >= kMaxSweeps)
        throw ConvergenceError(
            "Jacobi eigendecomposition did not converge within " +
            std::to_string(kMaxSweeps) + " sweeps (matrix Frobenius norm " +
            std::to_string(s.frobenius_norm()) + ")");
      for (std::size_t p = 0; p < n - 1; ++p)
        for (std::size_t col = p + 1; col < n; ++col) jacobi_rotate(a, q, p, col);
      ++sweep;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t lhs, std::size_t rhs) { return a(lhs, lhs) < a(rhs, rhs); });

  EigenDecomp out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = q(i, order[j]);
  }
  return out;
}

SymMatrix shifted_inverse(const SymMatrix& a, double b, double tol_sep) {
  const EigenDecomp ed = sym_eigen(a);
  const std::size_t n = a.dim();
  for (double lambda : ed.eigenvalues) {
    if (std::abs(lambda - b) <= tol_sep)
      throw BarrierCollisionError("eigenvalue " + std::to_string(lambda) +
                                      " is within tol_sep of the barrier " + std::to_string(b),
                                  lambda, b);
  }
  // M = Q diag(1/(lambda_i - b)) Q^T
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += ed.eigenvectors(i, k) * ed.eigenvectors(j, k) / (ed.eigenvalues[k] - b);
      m.set(i, j, sum);
    }
  }
  return m;
}

double quad_form(const SymMatrix& m, std::span<const double> u) {
  if (u.size() != m.dim()) throw DimensionError("quad_form: vector length does not match dim");
  return dot(u, multiply(m, u));
}

double op_norm_sq(const ColumnSet& u) {
  SymMatrix frame(u.dim());
  for (std::size_t j = 0; j < u.count(); ++j) frame.add_outer(u.column(j));
  const EigenDecomp ed = sym_eigen(frame);
  return ed.eigenvalues.back();
}

SymMatrix sherman_morrison_update(const SymMatrix& m, std::span<const double> w,
                                  double tol_sep) {
  const std::vector<double> mw = multiply(m, w);
  const double denom = 1.0 + dot(w, mw);
  if (std::abs(denom) <= tol_sep)
    throw SingularUpdateError(
        "rank-one update denominator 1 + w^T M w = " + std::to_string(denom) +
            " is within tol_sep of zero",
        denom);
  SymMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) out.set(i, j, m(i, j) - mw[i] * mw[j] / denom);
  return out;
}

SymMatrix gram(const ColumnSet& u, std::span<const std::size_t> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] >= u.count())
      throw DimensionError("gram: index " + std::to_string(s[a]) + " out of range");
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b])
        throw DimensionError("gram: duplicate index " + std::to_string(s[a]));
  }
  SymMatrix g(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a; b < s.size(); ++b) g.set(a, b, dot(u.column(s[a]), u.column(s[b])));
  return g;
}

}  // namespace rinv
