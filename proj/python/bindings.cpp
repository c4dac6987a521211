#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rinv/certify.hpp"
#include "rinv/column_set.hpp"
#include "rinv/errors.hpp"
#include "rinv/generate.hpp"
#include "rinv/matops.hpp"
#include "rinv/selector.hpp"

namespace py = pybind11;
using namespace rinv;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionError("matrix needs at least one row and one column");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size())
      throw DimensionError("ragged rows: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> matrix_to_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

py::dict step_to_dict(const StepRecord& rec) {
  py::dict d;
  d["step"] = rec.step;
  d["b"] = rec.b;
  d["bprime"] = rec.bprime;
  d["index"] = rec.index;
  d["q"] = rec.q;
  d["r"] = rec.r;
  d["phi_before"] = rec.phi_before;
  d["phi_after"] = rec.phi_after;
  d["candidates_passing"] = rec.candidates_passing;
  return d;
}

py::dict select_columns(const std::vector<std::vector<double>>& rows, double epsilon,
                        std::optional<std::size_t> k, const std::string& rule, bool normalize) {
  Matrix m = matrix_from_rows(rows);
  if (normalize) m = normalize_columns(m);
  const ColumnSet u{m};
  const Params p = derive_params(u, epsilon, k, tie_break_from_string(rule));
  const SelectionResult result = run_selection(u, p);
  const CertReport report = certify(u, p, result);

  py::dict out;
  out["epsilon"] = p.epsilon;
  out["b0"] = p.b0;
  out["delta"] = p.delta;
  out["k"] = p.k;
  out["op_norm_sq"] = p.op_norm_sq;
  out["tie_break"] = to_string(p.tie_break);
  out["indices"] = result.indices;
  out["certified_bound"] = result.certified_bound;
  out["corollary_bound"] = result.corollary_bound;
  out["lambda_min"] = result.lambda_min;
  out["bt_target"] = result.bt_target;
  out["margin_certified"] = report.margin_certified;
  out["margin_bt"] = report.margin_bt;
  py::list trace;
  for (const StepRecord& rec : result.trace) trace.append(step_to_dict(rec));
  out["trace"] = trace;
  return out;
}

double riesz_bound(const std::vector<std::vector<double>>& rows,
                   const std::vector<std::size_t>& indices) {
  const ColumnSet u{matrix_from_rows(rows)};
  return riesz_lower_bound(u, indices);
}

py::dict best_subset(const std::vector<std::vector<double>>& rows, std::size_t k) {
  const ColumnSet u{matrix_from_rows(rows)};
  const OracleReport report = brute_force_best(u, k);
  py::dict out;
  out["indices"] = report.best_indices;
  out["lambda_min"] = report.best_lambda_min;
  out["subsets_examined"] = report.subsets_examined;
  return out;
}

py::list lemma_margins(const std::vector<std::vector<double>>& rows, double epsilon,
                       std::size_t samples, std::uint64_t seed) {
  const ColumnSet u{matrix_from_rows(rows)};
  const Params p = derive_params(u, epsilon);
  py::list out;
  for (const LemmaRecord& rec : harvest_lemma_samples(u, p, samples, seed)) {
    py::dict d;
    d["state_step"] = rec.state_step;
    d["b"] = rec.b;
    d["delta"] = rec.delta;
    d["step1_margin"] = rec.step1_margin;
    d["phi_b"] = rec.phi_b;
    d["phi_bprime"] = rec.phi_bprime;
    d["step3_lhs"] = rec.step3_lhs;
    d["step3_rhs"] = rec.step3_rhs;
    out.append(d);
  }
  return out;
}

std::vector<std::vector<double>> generate_rows(const std::string& kind, std::size_t dim,
                                               std::size_t n, std::uint64_t seed,
                                               double coherence) {
  return matrix_to_rows(generate(gen_kind_from_string(kind), dim, n, seed, coherence));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "column subset selection with certified spectral lower bounds";

  static py::exception<Error> base_error(mod, "RinvError");
  static py::exception<ScheduleError> schedule_error(mod, "InfeasibleScheduleError",
                                                     base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ScheduleError& e) {
      py::set_error(schedule_error, e.what());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  mod.def("generate", &generate_rows, py::arg("kind"), py::arg("dim"), py::arg("n"),
          py::arg("seed"), py::arg("coherence") = 0.95,
          "Build a unit-norm column system, returned as a list of rows.");
  mod.def("select", &select_columns, py::arg("columns"), py::arg("epsilon"),
          py::arg("k") = py::none(), py::arg("rule") = "first-index",
          py::arg("normalize") = false,
          "Run the barrier selection and certification; returns a result dict.");
  mod.def("riesz_lower_bound", &riesz_bound, py::arg("columns"), py::arg("indices"),
          "Smallest eigenvalue of the Gram matrix of the chosen columns.");
  mod.def("brute_force_best", &best_subset, py::arg("columns"), py::arg("k"),
          "Exhaustively find the k-subset maximizing the Gram lower bound.");
  mod.def("lemma_margins", &lemma_margins, py::arg("columns"), py::arg("epsilon"),
          py::arg("samples"), py::arg("seed"),
          "Sample the selection trajectory and report the inequality margins.");
}
