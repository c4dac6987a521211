#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rinv/column_set.hpp"
#include "rinv/selector.hpp"

namespace rinv {

struct CertReport {
  double lambda_min = 0.0;
  double certified_bound = 0.0;
  double bt_target = 0.0;
  double margin_certified = 0.0;  // lambda_min - certified_bound
  double margin_bt = 0.0;         // lambda_min - bt_target, informational only
  bool default_k = false;         // k matched ceil(epsilon^2 * n / opnorm^2)
};

struct OracleReport {
  std::vector<std::size_t> best_indices;
  double best_lambda_min = 0.0;
  double algorithm_lambda_min = std::numeric_limits<double>::quiet_NaN();
  std::size_t subsets_examined = 0;
};

// One randomized lemma check harvested from an algorithm trajectory:
// a visited state (A at barrier b) probed with a barrier drop delta
// at least as large as the schedule's.
struct LemmaRecord {
  std::size_t state_step = 0;
  double b = 0.0;
  double delta = 0.0;
  double step1_margin = 0.0;
  double phi_b = 0.0;
  double phi_bprime = 0.0;
  double step3_lhs = 0.0;
  double step3_rhs = 0.0;
};

// Smallest eigenvalue of the Gram matrix of the columns in s.
double riesz_lower_bound(const ColumnSet& u, std::span<const std::size_t> s);

// Recomputes lambda_min from the raw columns and asserts it exceeds the
// certified bound; throws CertificationError with full margins otherwise.
// The restricted-invertibility target (1-2e)(1-e) is reported, not asserted.
CertReport certify(const ColumnSet& u, const Params& p, const SelectionResult& result);

// Exhaustive search over all C(n, k) subsets for the one maximizing the
// smallest Gram eigenvalue. Capped at n <= 16.
OracleReport brute_force_best(
    const ColumnSet& u, std::size_t k,
    double algorithm_lambda_min = std::numeric_limits<double>::quiet_NaN());

// Runs the selection on (u, p), records every visited state, and probes
// `samples` randomly chosen states with randomized barrier drops, returning
// the three lemma checks for each.
std::vector<LemmaRecord> harvest_lemma_samples(const ColumnSet& u, const Params& p,
                                               std::size_t samples, std::uint64_t seed);

}  // namespace rinv
