#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rinv/barrier.hpp"
#include "rinv/column_set.hpp"
#include "rinv/errors.hpp"
#include "rinv/matops.hpp"
#include "rinv/matrix.hpp"

namespace rinv {

inline constexpr double kDefaultTolStrict = 1e-9;
inline constexpr double kPhiMonotoneTol = 1e-9;
inline constexpr double kInverseDriftTol = 1e-8;

enum class TieBreak { kFirstIndex, kMinNewPotential };

std::string to_string(TieBreak rule);
TieBreak tie_break_from_string(const std::string& name);

// Run schedule: starting barrier b0 = 1 - 2*epsilon, per-step barrier
// drop delta = (1 - 2*epsilon) * op_norm_sq / (epsilon * n), and the
// number of steps k. Constructed through derive_params.
struct Params {
  double epsilon = 0.0;
  std::size_t n = 0;
  double op_norm_sq = 0.0;
  double b0 = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  TieBreak tie_break = TieBreak::kFirstIndex;
  double tol_strict = kDefaultTolStrict;
  double tol_sep = kDefaultTolSep;

  // Throws PreconditionError on malformed fields and ScheduleError when
  // b0 - k*delta <= delta.
  void validate() const;
};

// Largest k with b0 - k*delta > delta, or 0 when even one step fails.
std::size_t max_feasible_k(double b0, double delta);

// State after `step` selections: frame operator A of the chosen columns,
// current barrier b, and the cached potential phi at that barrier.
struct BarrierState {
  SymMatrix a;
  std::vector<std::size_t> selected;
  double b = 0.0;
  double phi = 0.0;
  std::size_t step = 0;
};

// Scores of one unselected column against M' = (A - b'I)^{-1}:
// q = u^T M' u, r = ||U^T M' u||^2. A column is selectable when
// q < -1 - tol_strict and r <= (phi_b - phi_bprime) * (-1 - q) + tol_strict;
// adding it moves the potential to new_phi = phi_bprime - r / (1 + q).
struct CandidateScore {
  std::size_t index = 0;
  double q = 0.0;
  double r = 0.0;
  bool passes_q = false;
  bool passes_e1 = false;
  double new_phi = 0.0;
};

struct StepRecord {
  std::size_t step = 0;  // 1-based
  double b = 0.0;
  double bprime = 0.0;
  std::size_t index = 0;
  double q = 0.0;
  double r = 0.0;
  double phi_before = 0.0;
  double phi_after = 0.0;
  std::size_t candidates_passing = 0;
};

struct SelectionResult {
  std::vector<std::size_t> indices;
  double certified_bound = 0.0;    // b0 - k*delta
  double corollary_bound = 0.0;    // b0 - (k-1)*delta
  double lambda_min = 0.0;         // smallest eigenvalue of the selected Gram matrix
  double bt_target = 0.0;          // (1 - 2*epsilon)(1 - epsilon)
  std::vector<StepRecord> trace;
};

// Wraps a failure inside the selection loop, keeping the records of the
// steps that completed before the failure.
class SelectionError : public Error {
 public:
  SelectionError(const std::string& what, std::vector<StepRecord> partial)
      : Error(what), partial_trace_(std::move(partial)) {}
  const std::vector<StepRecord>& partial_trace() const { return partial_trace_; }

 private:
  std::vector<StepRecord> partial_trace_;
};

// Schedule from epsilon and the column system. Without k_override,
// k = ceil(epsilon^2 * n / op_norm_sq). The starting potential identity
// -n/b0 = -n - 2*op_norm_sq/delta then holds by construction.
Params derive_params(const ColumnSet& u, double epsilon,
                     std::optional<std::size_t> k_override = std::nullopt,
                     TieBreak tie_break = TieBreak::kFirstIndex,
                     double tol_strict = kDefaultTolStrict,
                     double tol_sep = kDefaultTolSep);

// Empty selection: A = 0, b = b0, phi = -n/b0.
BarrierState initial_state(const ColumnSet& u, const Params& p);

// One score per unselected index, ordered by index. Throws
// NoCandidateError when no candidate passes both tests.
std::vector<CandidateScore> score_candidates(const ColumnSet& u, const BarrierState& state,
                                             const Params& p);

// Picks a passing candidate per p.tie_break, adds its column to A, lowers
// the barrier by delta, and updates phi. With verify set, cross-checks the
// rank-one inverse update against a fresh shifted inverse, the selected
// Gram spectrum against the new barrier, and the potential hypothesis.
std::pair<StepRecord, BarrierState> select_step(const ColumnSet& u, const BarrierState& state,
                                                const Params& p, bool verify = true);

// Runs exactly p.k steps and certifies the final Gram spectrum against
// b0 - k*delta. Failures carry the partial trace as SelectionError.
SelectionResult run_selection(const ColumnSet& u, const Params& p, bool verify = true);

}  // namespace rinv
