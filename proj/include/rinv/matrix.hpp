#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rinv {

/// Dense row-major matrix of doubles. General (not necessarily square)
/// storage used for eigenvector bases and intermediate products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_.data() + i * cols_, cols_);
  }

  std::span<const double> data() const { return data_; }

  double max_norm() const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Symmetric dense matrix. Symmetry is an invariant: construction from a
/// general matrix averages with the transpose, and the only mutators
/// write both (i,j) and (j,i).
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  static SymMatrix zero(std::size_t dim) { return SymMatrix(dim); }
  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> entries);
  /// Symmetrizes: S = (M + M^T) / 2. M must be square.
  static SymMatrix from_matrix(const Matrix& m);

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
  }

  /// A += scale * w w^T.
  void add_outer(std::span<const double> w, double scale = 1.0);
  void add_scaled_identity(double scale);

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_.data() + i * dim_, dim_);
  }

  Matrix to_matrix() const;

  double max_norm() const;
  double frobenius_norm() const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

SymMatrix add(const SymMatrix& a, const SymMatrix& b);
SymMatrix subtract(const SymMatrix& a, const SymMatrix& b);
SymMatrix scale(const SymMatrix& a, double factor);
/// Product of two symmetric matrices that commute (e.g. functions of the
/// same matrix); the result is symmetrized.
SymMatrix multiply_sym(const SymMatrix& a, const SymMatrix& b);
std::vector<double> multiply(const SymMatrix& m, std::span<const double> v);
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

}  // namespace rinv
