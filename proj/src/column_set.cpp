#include "rinv/column_set.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rinv/errors.hpp"

namespace rinv {

ColumnSet::ColumnSet(const Matrix& columns_as_matrix)
    : dim_(columns_as_matrix.rows()),
      count_(columns_as_matrix.cols()),
      data_(dim_ * count_, 0.0) {
  for (std::size_t j = 0; j < count_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) data_[j * dim_ + i] = columns_as_matrix(i, j);
  validate();
}

ColumnSet::ColumnSet(std::size_t dim, std::size_t count, std::vector<double> column_major)
    : dim_(dim), count_(count), data_(std::move(column_major)) {
  if (data_.size() != dim_ * count_)
    throw DimensionError("column set: data length does not equal dim * count");
  validate();
}

void ColumnSet::validate() const {
  if (dim_ == 0) throw DimensionError("column set: dim must be positive");
  if (count_ == 0) throw DimensionError("column set: count must be positive");
  for (std::size_t j = 0; j < count_; ++j) {
    const double len = norm(column(j));
    if (std::abs(len - 1.0) > kUnitNormTol)
      throw DimensionError("column " + std::to_string(j) + " has norm " + std::to_string(len) +
                           ", expected unit norm");
  }
}

Matrix ColumnSet::to_matrix() const {
  Matrix m(dim_, count_);
  for (std::size_t j = 0; j < count_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = data_[j * dim_ + i];
  return m;
}

Matrix normalize_columns(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, j) * m(i, j);
    const double len = std::sqrt(sum);
    if (len == 0.0)
      throw DimensionError("normalize: column " + std::to_string(j) + " is zero");
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j) / len;
  }
  return out;
}

}  // namespace rinv
