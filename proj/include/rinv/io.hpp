#pragma once

#include <string>

#include "rinv/matrix.hpp"
#include "rinv/selector.hpp"

namespace rinv {

// Text matrix format: header line "d n", then d rows of n reals written
// with 17 significant digits so values round-trip bit-exactly.
void write_matrix_file(const std::string& path, const Matrix& m);
Matrix read_matrix_file(const std::string& path);

std::string format_real(double value);

// JSON result format holding the schedule, the selection outcome, and the
// per-step trace.
struct ResultFile {
  double epsilon = 0.0;
  double b0 = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  double op_norm_sq = 0.0;
  std::string tie_break;
  double tol_strict = 0.0;
  double tol_sep = 0.0;
  SelectionResult result;
};

void write_result_file(const std::string& path, const Params& p, const SelectionResult& result);
ResultFile read_result_file(const std::string& path);

}  // namespace rinv
