#include "rinv/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rinv/barrier.hpp"
#include "rinv/errors.hpp"
#include "rinv/matops.hpp"

namespace rinv {

double riesz_lower_bound(const ColumnSet& u, std::span<const std::size_t> s) {
  return sym_eigen(gram(u, s)).eigenvalues.front();
}

CertReport certify(const ColumnSet& u, const Params& p, const SelectionResult& result) {
  if (result.indices.size() != p.k)
    throw CertificationError("result holds " + std::to_string(result.indices.size()) +
                             " indices, schedule requires " + std::to_string(p.k));
  for (std::size_t a = 0; a < result.indices.size(); ++a) {
    if (result.indices[a] >= u.count())
      throw CertificationError("selected index " + std::to_string(result.indices[a]) +
                               " is out of range");
    for (std::size_t b = a + 1; b < result.indices.size(); ++b)
      if (result.indices[a] == result.indices[b])
        throw CertificationError("selected index " + std::to_string(result.indices[a]) +
                                 " appears twice");
  }

  CertReport report;
  report.certified_bound = p.b0 - static_cast<double>(p.k) * p.delta;
  report.bt_target = (1.0 - 2.0 * p.epsilon) * (1.0 - p.epsilon);
  report.lambda_min = riesz_lower_bound(u, result.indices);
  report.margin_certified = report.lambda_min - report.certified_bound;
  report.margin_bt = report.lambda_min - report.bt_target;
  const auto default_k = static_cast<std::size_t>(
      std::ceil(p.epsilon * p.epsilon * static_cast<double>(p.n) / p.op_norm_sq));
  report.default_k = p.k == default_k;

  if (std::abs(report.lambda_min - result.lambda_min) > 1e-8)
    throw CertificationError("recomputed lambda_min " + std::to_string(report.lambda_min) +
                             " disagrees with the recorded value " +
                             std::to_string(result.lambda_min));
  if (std::abs(report.certified_bound - result.certified_bound) > 1e-8)
    throw CertificationError("recomputed certified bound " +
                             std::to_string(report.certified_bound) +
                             " disagrees with the recorded value " +
                             std::to_string(result.certified_bound));
  if (!(report.lambda_min > report.certified_bound))
    throw CertificationError("lambda_min " + std::to_string(report.lambda_min) +
                             " does not exceed the certified bound " +
                             std::to_string(report.certified_bound) + " (margin " +
                             std::to_string(report.margin_certified) + ", target margin " +
                             std::to_string(report.margin_bt) + ")");
  return report;
}

OracleReport brute_force_best(const ColumnSet& u, std::size_t k, double algorithm_lambda_min) {
  if (u.count() > 16)
    throw PreconditionError("exhaustive search is capped at 16 columns, got " +
                            std::to_string(u.count()));
  if (k == 0 || k > u.count())
    throw PreconditionError("subset size must lie in [1, n]");

  OracleReport report;
  report.algorithm_lambda_min = algorithm_lambda_min;
  report.best_lambda_min = -1.0;

  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    const double lm = riesz_lower_bound(u, subset);
    ++report.subsets_examined;
    if (lm > report.best_lambda_min) {
      report.best_lambda_min = lm;
      report.best_indices = subset;
    }
    // next lexicographic k-combination of {0..n-1}
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == u.count() - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return report;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<LemmaRecord> harvest_lemma_samples(const ColumnSet& u, const Params& p,
                                               std::size_t samples, std::uint64_t seed) {
  std::vector<BarrierState> states;
  states.push_back(initial_state(u, p));
  for (std::size_t t = 0; t < p.k; ++t) {
    auto [record, next] = select_step(u, states.back(), p, false);
    states.push_back(std::move(next));
  }

  std::mt19937_64 rng(seed);
  std::vector<LemmaRecord> records;
  records.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const BarrierState& state = states[rng() % states.size()];
    // Any delta' in [delta, b/2] keeps the lemma preconditions valid:
    // b' = b - delta' >= delta', the spectrum stays above b, and the
    // potential hypothesis only loosens as delta' grows.
    const double hi = 0.5 * state.b;
    double delta = p.delta >= hi ? hi : p.delta + (hi - p.delta) * uniform01(rng);

    LemmaRecord rec;
    rec.state_step = state.step;
    rec.b = state.b;
    rec.delta = delta;
    rec.step1_margin = check_step1(state.a, state.b, delta, p.tol_sep);
    const StepPotentials pots = check_step2(u, state.a, state.b, delta, p.tol_sep);
    rec.phi_b = pots.phi_b;
    rec.phi_bprime = pots.phi_bprime;
    const Step3Bound bound = check_step3(u, state.a, state.b, delta, p.tol_sep);
    rec.step3_lhs = bound.lhs;
    rec.step3_rhs = bound.rhs;
    records.push_back(rec);
  }
  return records;
}

}  // namespace rinv
