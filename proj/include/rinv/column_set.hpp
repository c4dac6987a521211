#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rinv/matrix.hpp"

namespace rinv {

inline constexpr double kUnitNormTol = 1e-8;

// A system of unit-norm vectors in R^d, stored column-major so each
// column is contiguous. Construction rejects any column whose Euclidean
// norm differs from 1 by more than kUnitNormTol.
class ColumnSet {
 public:
  // Takes the columns of a d-by-n matrix.
  explicit ColumnSet(const Matrix& columns_as_matrix);

  // Takes n contiguous columns of length d from flat column-major data.
  ColumnSet(std::size_t dim, std::size_t count, std::vector<double> column_major);

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return count_; }

  std::span<const double> column(std::size_t j) const {
    return std::span<const double>(data_.data() + j * dim_, dim_);
  }

  // The d-by-n matrix whose columns are the stored vectors.
  Matrix to_matrix() const;

 private:
  void validate() const;

  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::vector<double> data_;
};

// Rescales each column of m to unit norm. Throws DimensionError if any
// column is zero.
Matrix normalize_columns(const Matrix& m);

}  // namespace rinv
