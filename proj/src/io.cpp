#include "rinv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rinv/errors.hpp"

namespace rinv {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw ParseError("failed writing " + path);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) throw ParseError(path + ": missing header line");
  std::istringstream hs(header);
  long long d = 0;
  long long n = 0;
  if (!(hs >> d >> n) || d <= 0 || n <= 0)
    throw ParseError(path + ": header must be two positive integers \"d n\", got \"" + header +
                     "\"");
  std::string trailing;
  if (hs >> trailing) throw ParseError(path + ": unexpected token \"" + trailing + "\" in header");

  Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(in >> m(i, j)))
        throw ParseError(path + ": expected " + std::to_string(d * n) + " entries, failed at row " +
                         std::to_string(i) + " column " + std::to_string(j));
  double extra = 0.0;
  if (in >> extra) throw ParseError(path + ": trailing data after the matrix entries");
  return m;
}

namespace {

using nlohmann::json;

json trace_to_json(const std::vector<StepRecord>& trace) {
  json arr = json::array();
  for (const StepRecord& rec : trace) {
    arr.push_back(json{{"step", rec.step},
                       {"b", rec.b},
                       {"bprime", rec.bprime},
                       {"index", rec.index},
                       {"q", rec.q},
                       {"r", rec.r},
                       {"phi_before", rec.phi_before},
                       {"phi_after", rec.phi_after},
                       {"candidates_passing", rec.candidates_passing}});
  }
  return arr;
}

std::vector<StepRecord> trace_from_json(const json& arr) {
  std::vector<StepRecord> trace;
  for (const json& item : arr) {
    StepRecord rec;
    rec.step = item.at("step").get<std::size_t>();
    rec.b = item.at("b").get<double>();
    rec.bprime = item.at("bprime").get<double>();
    rec.index = item.at("index").get<std::size_t>();
    rec.q = item.at("q").get<double>();
    rec.r = item.at("r").get<double>();
    rec.phi_before = item.at("phi_before").get<double>();
    rec.phi_after = item.at("phi_after").get<double>();
    rec.candidates_passing = item.at("candidates_passing").get<std::size_t>();
    trace.push_back(rec);
  }
  return trace;
}

}  // namespace

void write_result_file(const std::string& path, const Params& p, const SelectionResult& result) {
  json doc{{"epsilon", p.epsilon},
           {"b0", p.b0},
           {"delta", p.delta},
           {"k", p.k},
           {"op_norm_sq", p.op_norm_sq},
           {"indices", result.indices},
           {"certified_bound", result.certified_bound},
           {"corollary_bound", result.corollary_bound},
           {"lambda_min", result.lambda_min},
           {"bt_target", result.bt_target},
           {"trace", trace_to_json(result.trace)},
           {"tie_break", to_string(p.tie_break)},
           {"tolerances", json{{"tol_strict", p.tol_strict}, {"tol_sep", p.tol_sep}}}};
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw ParseError("failed writing " + path);
}

ResultFile read_result_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  ResultFile file;
  try {
    file.epsilon = doc.at("epsilon").get<double>();
    file.b0 = doc.at("b0").get<double>();
    file.delta = doc.at("delta").get<double>();
    file.k = doc.at("k").get<std::size_t>();
    file.op_norm_sq = doc.at("op_norm_sq").get<double>();
    file.tie_break = doc.at("tie_break").get<std::string>();
    file.tol_strict = doc.at("tolerances").at("tol_strict").get<double>();
    file.tol_sep = doc.at("tolerances").at("tol_sep").get<double>();
    file.result.indices = doc.at("indices").get<std::vector<std::size_t>>();
    file.result.certified_bound = doc.at("certified_bound").get<double>();
    file.result.corollary_bound = doc.at("corollary_bound").get<double>();
    file.result.lambda_min = doc.at("lambda_min").get<double>();
    file.result.bt_target = doc.at("bt_target").get<double>();
    file.result.trace = trace_from_json(doc.at("trace"));
  } catch (const json::exception& e) {
    throw ParseError(path + ": missing or mistyped field: " + e.what());
  }
  return file;
}

}  // namespace rinv
