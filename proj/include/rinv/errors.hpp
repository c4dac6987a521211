#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rinv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (vector length vs matrix dim, etc.).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel failed to converge within its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue sits within tol_sep of the barrier, so the shifted
/// matrix cannot be inverted reliably.
class BarrierCollisionError : public Error {
 public:
  BarrierCollisionError(const std::string& what, double eigenvalue, double barrier)
      : Error(what), eigenvalue_(eigenvalue), barrier_(barrier) {}

  double eigenvalue() const { return eigenvalue_; }
  double barrier() const { return barrier_; }

 private:
  double eigenvalue_;
  double barrier_;
};

/// The rank-one update denominator 1 + w^T M w is too close to zero.
class SingularUpdateError : public Error {
 public:
  SingularUpdateError(const std::string& what, double denominator)
      : Error(what), denominator_(denominator) {}

  double denominator() const { return denominator_; }

 private:
  double denominator_;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested (epsilon, k) schedule violates b0 - k*delta > delta.
/// Corresponds to the regime where the barrier budget is exhausted and
/// the selection process has to stop.
class ScheduleError : public Error {
 public:
  ScheduleError(const std::string& what, double final_bound, std::size_t max_feasible_k)
      : Error(what), final_bound_(final_bound), max_feasible_k_(max_feasible_k) {}

  double final_bound() const { return final_bound_; }
  std::size_t max_feasible_k() const { return max_feasible_k_; }

 private:
  double final_bound_;
  std::size_t max_feasible_k_;
};

/// No unselected column passes the selection inequalities. Unreachable
/// under a valid schedule; reaching it signals a hypothesis or
/// tolerance violation.
class NoCandidateError : public Error {
 public:
  using Error::Error;
};

/// Post-hoc certification of a selection result failed.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// A matrix or result file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rinv
