#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rinv/certify.hpp"
#include "rinv/column_set.hpp"
#include "rinv/errors.hpp"
#include "rinv/generate.hpp"
#include "rinv/io.hpp"
#include "rinv/selector.hpp"

namespace {

using namespace rinv;

ColumnSet load_columns(const std::string& path, bool normalize) {
  Matrix m = read_matrix_file(path);
  if (normalize) m = normalize_columns(m);
  return ColumnSet(m);
}

int cmd_gen(const std::string& kind, std::size_t d, std::size_t n, std::uint64_t seed,
            const std::string& out, double coherence) {
  write_matrix_file(out, generate(gen_kind_from_string(kind), d, n, seed, coherence));
  std::cout << "wrote " << d << "x" << n << " " << kind << " matrix to " << out << "\n";
  return 0;
}

int cmd_select(const std::string& input, double epsilon, std::optional<std::size_t> k,
               const std::string& rule, double tol_strict, bool normalize,
               const std::string& out) {
  const ColumnSet u = load_columns(input, normalize);
  const Params p = derive_params(u, epsilon, k, tie_break_from_string(rule), tol_strict);
  const SelectionResult result = run_selection(u, p, true);
  const CertReport report = certify(u, p, result);
  write_result_file(out, p, result);

  std::cout << "epsilon          " << format_real(p.epsilon) << "\n"
            << "n                " << p.n << "\n"
            << "op_norm_sq       " << format_real(p.op_norm_sq) << "\n"
            << "b0               " << format_real(p.b0) << "\n"
            << "delta            " << format_real(p.delta) << "\n"
            << "k                " << p.k << "\n"
            << "indices          ";
  for (std::size_t i = 0; i < result.indices.size(); ++i)
    std::cout << (i ? " " : "") << result.indices[i];
  std::cout << "\n"
            << "lambda_min       " << format_real(report.lambda_min) << "\n"
            << "certified_bound  " << format_real(report.certified_bound) << "\n"
            << "corollary_bound  " << format_real(result.corollary_bound) << "\n"
            << "bt_target        " << format_real(report.bt_target) << "\n"
            << "margin_certified " << format_real(report.margin_certified) << "\n"
            << "margin_bt        " << format_real(report.margin_bt) << "\n"
            << "result file      " << out << "\n";
  return 0;
}

bool matches(double recomputed, double recorded, const char* name) {
  const double scale = std::max({1.0, std::abs(recomputed), std::abs(recorded)});
  if (std::abs(recomputed - recorded) <= 1e-8 * scale) return true;
  std::cerr << "mismatch in " << name << ": recomputed " << format_real(recomputed)
            << ", recorded " << format_real(recorded) << "\n";
  return false;
}

int cmd_verify(const std::string& input, const std::string& result_path) {
  const ColumnSet u = load_columns(input, false);
  const ResultFile recorded = read_result_file(result_path);

  const Params p = derive_params(u, recorded.epsilon, recorded.k,
                                 tie_break_from_string(recorded.tie_break), recorded.tol_strict,
                                 recorded.tol_sep);
  bool ok = matches(p.b0, recorded.b0, "b0");
  ok &= matches(p.delta, recorded.delta, "delta");
  ok &= matches(p.op_norm_sq, recorded.op_norm_sq, "op_norm_sq");

  const SelectionResult rerun = run_selection(u, p, true);
  if (rerun.indices != recorded.result.indices) {
    std::cerr << "mismatch in indices: the deterministic re-run selected a different set\n";
    ok = false;
  }
  ok &= matches(rerun.certified_bound, recorded.result.certified_bound, "certified_bound");
  ok &= matches(rerun.corollary_bound, recorded.result.corollary_bound, "corollary_bound");
  ok &= matches(rerun.lambda_min, recorded.result.lambda_min, "lambda_min");
  ok &= matches(rerun.bt_target, recorded.result.bt_target, "bt_target");

  if (rerun.trace.size() != recorded.result.trace.size()) {
    std::cerr << "mismatch in trace length: recomputed " << rerun.trace.size() << ", recorded "
              << recorded.result.trace.size() << "\n";
    ok = false;
  } else {
    for (std::size_t t = 0; t < rerun.trace.size(); ++t) {
      const StepRecord& a = rerun.trace[t];
      const StepRecord& b = recorded.result.trace[t];
      const std::string tag = "trace[" + std::to_string(t) + "].";
      if (a.step != b.step || a.index != b.index || a.candidates_passing != b.candidates_passing) {
        std::cerr << "mismatch in " << tag << "{step,index,candidates_passing}\n";
        ok = false;
      }
      ok &= matches(a.b, b.b, (tag + "b").c_str());
      ok &= matches(a.bprime, b.bprime, (tag + "bprime").c_str());
      ok &= matches(a.q, b.q, (tag + "q").c_str());
      ok &= matches(a.r, b.r, (tag + "r").c_str());
      ok &= matches(a.phi_before, b.phi_before, (tag + "phi_before").c_str());
      ok &= matches(a.phi_after, b.phi_after, (tag + "phi_after").c_str());
    }
  }

  const CertReport report = certify(u, p, rerun);
  if (!(recorded.result.lambda_min > recorded.result.certified_bound)) {
    std::cerr << "recorded lambda_min does not exceed the recorded certified bound\n";
    ok = false;
  }

  if (!ok) return 1;
  std::cout << "verified: lambda_min " << format_real(report.lambda_min)
            << " exceeds certified bound " << format_real(report.certified_bound) << "\n";
  return 0;
}

int cmd_lemmas(const std::string& input, double epsilon, std::size_t samples,
               std::uint64_t seed) {
  const ColumnSet u = load_columns(input, false);
  if (samples == 0) {
    std::cout << "samples          0\n";
    return 0;
  }
  const Params p = derive_params(u, epsilon);
  const std::vector<LemmaRecord> records = harvest_lemma_samples(u, p, samples, seed);

  double step1_min = records.front().step1_margin;
  double step2_max_gap = records.front().phi_bprime - records.front().phi_b;
  double step3_max_excess = records.front().step3_lhs - records.front().step3_rhs;
  for (const LemmaRecord& rec : records) {
    step1_min = std::min(step1_min, rec.step1_margin);
    step2_max_gap = std::max(step2_max_gap, rec.phi_bprime - rec.phi_b);
    step3_max_excess = std::max(step3_max_excess, rec.step3_lhs - rec.step3_rhs);
  }
  std::cout << "samples              " << records.size() << "\n"
            << "step1_min_margin     " << format_real(step1_min) << "\n"
            << "step2_max_phi_gap    " << format_real(step2_max_gap) << "\n"
            << "step3_max_excess     " << format_real(step3_max_excess) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"barrier-based column selection with certified lower Riesz bounds"};
  app.require_subcommand(1);

  std::string kind = "random-unit";
  std::size_t dim = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  double coherence = 0.95;
  CLI::App* gen = app.add_subcommand("gen", "generate a unit-column matrix file");
  gen->add_option("--kind", kind, "identity | random-unit | coherent-pairs | spiked");
  gen->add_option("--dim", dim, "rows d")->required();
  gen->add_option("--n", n, "columns n")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out, "output path")->required();
  gen->add_option("--coherence", coherence, "pair / spike coherence in [0, 1)");

  std::string input;
  double epsilon = 0.0;
  std::optional<std::size_t> k_override;
  std::string rule = "first";
  double tol_strict = kDefaultTolStrict;
  bool normalize = false;
  std::string result_path;
  CLI::App* select = app.add_subcommand("select", "run the selection and certify the bound");
  select->add_option("--input", input, "matrix file")->required();
  select->add_option("--epsilon", epsilon, "epsilon in (0, 1/2)")->required();
  select->add_option("--k", k_override, "override the default step count");
  select->add_option("--rule", rule, "first | greedy tie-break");
  select->add_option("--tol", tol_strict, "strict-inequality tolerance");
  select->add_flag("--normalize", normalize, "renormalize near-unit columns");
  select->add_option("--out", result_path, "result file path")->required();

  CLI::App* verify = app.add_subcommand("verify", "re-run and check a recorded result");
  verify->add_option("--input", input, "matrix file")->required();
  verify->add_option("--result", result_path, "result file")->required();

  std::size_t samples = 0;
  CLI::App* lemmas = app.add_subcommand("lemmas", "probe the step inequalities on trajectories");
  lemmas->add_option("--input", input, "matrix file")->required();
  lemmas->add_option("--epsilon", epsilon, "epsilon in (0, 1/2)")->required();
  lemmas->add_option("--samples", samples, "number of randomized probes")->required();
  lemmas->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(kind, dim, n, seed, out, coherence);
    if (select->parsed())
      return cmd_select(input, epsilon, k_override, rule, tol_strict, normalize, result_path);
    if (verify->parsed()) return cmd_verify(input, result_path);
    if (lemmas->parsed()) return cmd_lemmas(input, epsilon, samples, seed);
  } catch (const ScheduleError& e) {
    std::cerr << "schedule infeasible: " << e.what() << "\n"
              << "final bound " << format_real(e.final_bound()) << ", largest feasible k "
              << e.max_feasible_k() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
