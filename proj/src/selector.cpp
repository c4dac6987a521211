#include "rinv/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace rinv {

std::string to_string(TieBreak rule) {
  return rule == TieBreak::kFirstIndex ? "first-index" : "min-new-potential";
}

TieBreak tie_break_from_string(const std::string& name) {
  if (name == "first-index" || name == "first") return TieBreak::kFirstIndex;
  if (name == "min-new-potential" || name == "greedy") return TieBreak::kMinNewPotential;
  throw PreconditionError("unknown tie-break rule: " + name);
}

std::size_t max_feasible_k(double b0, double delta) {
  std::size_t best = 0;
  for (std::size_t t = 1; b0 - static_cast<double>(t) * delta > delta; ++t) best = t;
  return best;
}

void Params::validate() const {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw PreconditionError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  if (n == 0) throw PreconditionError("n must be positive");
  if (!(op_norm_sq >= 1.0 - 1e-9))
    throw PreconditionError("squared operator norm must be at least 1 for unit columns, got " +
                            std::to_string(op_norm_sq));
  if (b0 != 1.0 - 2.0 * epsilon)
    throw PreconditionError("b0 must equal 1 - 2*epsilon");
  const double lhs = delta * epsilon * static_cast<double>(n);
  const double rhs = (1.0 - 2.0 * epsilon) * op_norm_sq;
  if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs)))
    throw PreconditionError("delta does not satisfy delta*epsilon*n = (1-2*epsilon)*opnorm^2");
  if (k == 0) throw PreconditionError("k must be at least 1");
  if (!(tol_strict > 0.0) || !(tol_sep > 0.0))
    throw PreconditionError("tolerances must be positive");
  const double final_bound = b0 - static_cast<double>(k) * delta;
  if (!(final_bound > delta))
    throw ScheduleError("schedule infeasible: b0 - k*delta = " + std::to_string(final_bound) +
                            " does not exceed delta = " + std::to_string(delta) +
                            " (largest feasible k is " +
                            std::to_string(max_feasible_k(b0, delta)) + ")",
                        final_bound, max_feasible_k(b0, delta));
}

Params derive_params(const ColumnSet& u, double epsilon, std::optional<std::size_t> k_override,
                     TieBreak tie_break, double tol_strict, double tol_sep) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw PreconditionError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  Params p;
  p.epsilon = epsilon;
  p.n = u.count();
  p.op_norm_sq = op_norm_sq(u);
  p.b0 = 1.0 - 2.0 * epsilon;
  const double nn = static_cast<double>(p.n);
  p.delta = p.b0 * p.op_norm_sq / (epsilon * nn);
  p.k = k_override ? *k_override
                   : static_cast<std::size_t>(std::ceil(epsilon * epsilon * nn / p.op_norm_sq));
  p.tie_break = tie_break;
  p.tol_strict = tol_strict;
  p.tol_sep = tol_sep;
  p.validate();
  return p;
}

BarrierState initial_state(const ColumnSet& u, const Params& p) {
  p.validate();
  if (u.count() != p.n) throw DimensionError("initial_state: params built for a different n");
  BarrierState state{SymMatrix::zero(u.dim()), {}, p.b0, 0.0, 0};
  state.phi = -static_cast<double>(p.n) / p.b0;
  return state;
}

namespace {

struct ScoredState {
  SymMatrix m_bprime;  // (A - b'I)^{-1}
  double phi_b = 0.0;
  double phi_bprime = 0.0;
  std::vector<CandidateScore> scores;
  std::size_t passing = 0;
};

// Scores every unselected column against the lowered barrier. q and the
// potentials come from G2 = U^T M' U, whose diagonal holds the q values
// and whose column squared norms hold the r values.
// The barrier after t steps is always computed as b0 - t*delta from scratch,
// never by repeated subtraction, so every step sees exactly the value the
// schedule feasibility check in Params::validate reasoned about.
double barrier_after(const Params& p, std::size_t steps) {
  return p.b0 - static_cast<double>(steps) * p.delta;
}

ScoredState score_all(const ColumnSet& u, const BarrierState& state, const Params& p) {
  const double bprime = barrier_after(p, state.step + 1);
  if (!(bprime > p.delta))
    throw PreconditionError("lowered barrier " + std::to_string(bprime) +
                            " must stay above delta = " + std::to_string(p.delta));

  ScoredState out{shifted_inverse(state.a, bprime, p.tol_sep), 0.0, 0.0, {}, 0};

  const Matrix um = u.to_matrix();
  const Matrix g2 = multiply(transpose(um), multiply(out.m_bprime.to_matrix(), um));
  for (std::size_t j = 0; j < u.count(); ++j) out.phi_bprime += g2(j, j);
  out.phi_b = potential(u, state.a, state.b, p.tol_sep).value;

  const double delta_phi = out.phi_b - out.phi_bprime;
  std::vector<bool> taken(u.count(), false);
  for (std::size_t j : state.selected) taken[j] = true;

  for (std::size_t j = 0; j < u.count(); ++j) {
    if (taken[j]) continue;
    CandidateScore score;
    score.index = j;
    score.q = g2(j, j);
    double r = 0.0;
    for (std::size_t i = 0; i < u.count(); ++i) r += g2(i, j) * g2(i, j);
    score.r = r;
    score.passes_q = score.q < -1.0 - p.tol_strict;
    score.passes_e1 = score.r <= delta_phi * (-1.0 - score.q) + p.tol_strict;
    if (score.passes_q) score.new_phi = out.phi_bprime - score.r / (1.0 + score.q);
    out.scores.push_back(score);
    if (score.passes_q && score.passes_e1) ++out.passing;
  }
  return out;
}

std::size_t pick_candidate(const std::vector<CandidateScore>& scores, TieBreak rule) {
  std::size_t best = scores.size();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const CandidateScore& s = scores[i];
    if (!(s.passes_q && s.passes_e1)) continue;
    if (best == scores.size()) {
      best = i;
      if (rule == TieBreak::kFirstIndex) break;
      continue;
    }
    if (rule == TieBreak::kMinNewPotential && s.new_phi < scores[best].new_phi) best = i;
  }
  if (best == scores.size())
    throw NoCandidateError("no unselected column passes the selection inequalities");
  return best;
}

}  // namespace

std::vector<CandidateScore> score_candidates(const ColumnSet& u, const BarrierState& state,
                                             const Params& p) {
  ScoredState scored = score_all(u, state, p);
  if (scored.passing == 0)
    throw NoCandidateError("no unselected column passes the selection inequalities (" +
                           std::to_string(scored.scores.size()) + " candidates scored)");
  return std::move(scored.scores);
}

std::pair<StepRecord, BarrierState> select_step(const ColumnSet& u, const BarrierState& state,
                                                const Params& p, bool verify) {
  const double nn = static_cast<double>(p.n);
  const double hypothesis_bound = -nn - 2.0 * p.op_norm_sq / p.delta;
  if (state.phi > hypothesis_bound + kHypothesisSlack)
    throw PreconditionError("potential " + std::to_string(state.phi) +
                            " exceeds the hypothesis bound " + std::to_string(hypothesis_bound));

  ScoredState scored = score_all(u, state, p);
  if (scored.passing == 0)
    throw NoCandidateError("no unselected column passes the selection inequalities");
  const CandidateScore& chosen = scored.scores[pick_candidate(scored.scores, p.tie_break)];

  const double bprime = barrier_after(p, state.step + 1);
  BarrierState next{state.a, state.selected, bprime, chosen.new_phi, state.step + 1};
  next.a.add_outer(u.column(chosen.index));
  next.selected.push_back(chosen.index);

  StepRecord record{state.step + 1, state.b,    bprime,         chosen.index,  chosen.q,
                    chosen.r,       state.phi,  chosen.new_phi, scored.passing};

  if (verify) {
    const SymMatrix updated = sherman_morrison_update(scored.m_bprime, u.column(chosen.index),
                                                      p.tol_sep);
    const SymMatrix fresh = shifted_inverse(next.a, bprime, p.tol_sep);
    const double drift = max_abs_diff(updated, fresh);
    if (drift > kInverseDriftTol)
      throw CertificationError("rank-one inverse update drifted " + std::to_string(drift) +
                               " from the directly computed inverse");

    const auto gram_eigs = sym_eigen(gram(u, next.selected)).eigenvalues;
    if (gram_eigs.front() <= bprime)
      throw CertificationError("selected Gram eigenvalue " + std::to_string(gram_eigs.front()) +
                               " fell to or below the barrier " + std::to_string(bprime));

    if (next.phi > state.phi + kPhiMonotoneTol)
      throw CertificationError("potential increased across a step: " + std::to_string(state.phi) +
                               " -> " + std::to_string(next.phi));
    if (next.phi > hypothesis_bound + kHypothesisSlack)
      throw CertificationError("potential " + std::to_string(next.phi) +
                               " exceeds the hypothesis bound after the step");
  }

  return {record, std::move(next)};
}

SelectionResult run_selection(const ColumnSet& u, const Params& p, bool verify) {
  p.validate();
  if (u.count() != p.n) throw DimensionError("run_selection: params built for a different n");

  SelectionResult result;
  result.certified_bound = p.b0 - static_cast<double>(p.k) * p.delta;
  result.corollary_bound = p.b0 - static_cast<double>(p.k - 1) * p.delta;
  result.bt_target = (1.0 - 2.0 * p.epsilon) * (1.0 - p.epsilon);

  BarrierState state = initial_state(u, p);
  for (std::size_t t = 0; t < p.k; ++t) {
    try {
      auto [record, next] = select_step(u, state, p, verify);
      result.trace.push_back(record);
      state = std::move(next);
    } catch (const SelectionError&) {
      throw;
    } catch (const Error& e) {
      throw SelectionError("selection failed at step " + std::to_string(t + 1) + " of " +
                               std::to_string(p.k) + ": " + e.what(),
                           result.trace);
    }
  }

  result.indices = state.selected;
  result.lambda_min = sym_eigen(gram(u, result.indices)).eigenvalues.front();
  if (result.lambda_min <= result.certified_bound)
    throw SelectionError("final Gram eigenvalue " + std::to_string(result.lambda_min) +
                             " does not exceed the certified bound " +
                             std::to_string(result.certified_bound),
                         result.trace);
  return result;
}

}  // namespace rinv
