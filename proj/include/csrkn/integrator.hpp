#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "csrkn/construction.hpp"
#include "csrkn/problems.hpp"
#include "csrkn/trajectory.hpp"

namespace csrkn {

struct SolverConfig {
  double fp_tol = 1e-14;  // on max stage increment, scaled by 1 + |q|_inf
  int max_iters = 50;
  int record_every = 1;

  /// Throws std::invalid_argument on fp_tol <= 0, max_iters < 1 or record_every < 1.
  void validate() const;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int iterations, double increment)
      : std::runtime_error(what), iterations_(iterations), increment_(increment) {}

  int iterations() const { return iterations_; }
  /// Last stage increment (NaN when f produced a non-finite value).
  double increment() const { return increment_; }
  /// Zero-based step index, set by integrate().
  std::optional<long long> step() const { return step_; }
  void set_step(long long k) { step_ = k; }

 private:
  int iterations_;
  double increment_;
  std::optional<long long> step_;
};

struct StepResult {
  Vector q;
  Vector p;
  int iterations = 0;
};

/// One step of the implicit RKN scheme
///   Q_i = q + h c_i p + h^2 sum_j aBar_ij f(t + c_i h, Q_j)
///   q1  = q + h p + h^2 sum_i bBar_i f_i,  p1 = p + h sum_i bPrime_i f_i
/// with stage values from fixed-point iteration. h may be negative.
StepResult rkn_step(const RKNTableau& tableau, const SecondOrderProblem& problem, double t,
                    std::span<const double> q, std::span<const double> p, double h,
                    const SolverConfig& cfg = {});

/// n_steps steps of size h from (t0, q0, p0). Records the initial state, every
/// record_every-th step and always the last one.
Trajectory integrate(const RKNTableau& tableau, const SecondOrderProblem& problem, double t0,
                     const Vector& q0, const Vector& p0, double h, long long n_steps,
                     const SolverConfig& cfg = {});

/// Header t,q1..qd,p1..pd then <name>_err for each problem invariant.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory,
                          const SecondOrderProblem& problem);

}  // namespace csrkn
