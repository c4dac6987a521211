#include "rinv/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "rinv/errors.hpp"

namespace rinv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_norm() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i) s.set(i, i, 1.0);
  return s;
}

SymMatrix SymMatrix::diagonal(std::span<const double> entries) {
  SymMatrix s(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) s.set(i, i, entries[i]);
  return s;
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("symmetrize: matrix is not square");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return s;
}

void SymMatrix::add_outer(std::span<const double> w, double scale) {
  if (w.size() != dim_) throw DimensionError("add_outer: vector length does not match dim");
  for (std::size_t i = 0; i < dim_; ++i) {
    const double wi = scale * w[i];
    for (std::size_t j = 0; j < dim_; ++j) data_[i * dim_ + j] += wi * w[j];
  }
}

void SymMatrix::add_scaled_identity(double scale) {
  for (std::size_t i = 0; i < dim_; ++i) data_[i * dim_ + i] += scale;
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double SymMatrix::max_norm() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double SymMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

namespace {

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* op) {
  if (a.dim() != b.dim()) throw DimensionError(std::string(op) + ": dimensions differ");
}

}  // namespace

SymMatrix add(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "add");
  SymMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) out.set(i, j, a(i, j) + b(i, j));
  return out;
}

SymMatrix subtract(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "subtract");
  SymMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) out.set(i, j, a(i, j) - b(i, j));
  return out;
}

SymMatrix scale(const SymMatrix& a, double factor) {
  SymMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) out.set(i, j, factor * a(i, j));
  return out;
}

SymMatrix multiply_sym(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "multiply_sym");
  return SymMatrix::from_matrix(multiply(a.to_matrix(), b.to_matrix()));
}

std::vector<double> multiply(const SymMatrix& m, std::span<const double> v) {
  if (v.size() != m.dim()) throw DimensionError("matrix-vector product: dimensions differ");
  std::vector<double> out(m.dim(), 0.0);
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
  return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("dot: vector lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

}  // namespace rinv
