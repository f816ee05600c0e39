#include "csrkn/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "csrkn/format.hpp"

namespace csrkn {

void SolverConfig::validate() const {
  if (!(fp_tol > 0.0)) throw std::invalid_argument("fp_tol must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
}

namespace {

double max_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void evaluate_stages(const RKNTableau& tab, const SecondOrderProblem& pr, double t, double h,
                     const std::vector<Vector>& stages, std::vector<Vector>& forces, int iters) {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    pr.accel(t + tab.c[i] * h, stages[i], forces[i]);
    for (double x : forces[i])
      if (!std::isfinite(x))
        throw SolverError("non-finite acceleration in stage " + std::to_string(i + 1), iters,
                          std::numeric_limits<double>::quiet_NaN());
  }
}

}  // namespace

StepResult rkn_step(const RKNTableau& tab, const SecondOrderProblem& pr, double t,
                    std::span<const double> q, std::span<const double> p, double h,
                    const SolverConfig& cfg) {
  cfg.validate();
  if (h == 0.0) throw std::invalid_argument("step size must be nonzero");
  const std::size_t s = static_cast<std::size_t>(tab.stages());
  const std::size_t d = static_cast<std::size_t>(pr.dim);
  if (q.size() != d || p.size() != d) throw std::invalid_argument("state dimension mismatch");

  std::vector<Vector> base(s, Vector(d)), stages(s, Vector(d)), forces(s, Vector(d));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < d; ++k) base[i][k] = q[k] + h * tab.c[i] * p[k];
  stages = base;

  const double h2 = h * h;
  const double tol = cfg.fp_tol * (1.0 + max_norm(q));
  int iters = 0;
  double increment = std::numeric_limits<double>::infinity();
  while (true) {
    evaluate_stages(tab, pr, t, h, stages, forces, iters);
    if (increment < tol) break;
    if (iters == cfg.max_iters)
      throw SolverError("stage iteration did not converge in " + std::to_string(iters) +
                            " iterations (last increment " + format_double(increment) + ")",
                        iters, increment);
    ++iters;
    increment = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < s; ++j) acc += tab.a_bar(i, j) * forces[j][k];
        const double next = base[i][k] + h2 * acc;
        increment = std::max(increment, std::abs(next - stages[i][k]));
        stages[i][k] = next;
      }
    }
    if (!std::isfinite(increment))
      throw SolverError("stage iteration diverged", iters, increment);
  }

  StepResult out{Vector(d), Vector(d), iters};
  for (std::size_t k = 0; k < d; ++k) {
    double dq = 0.0, dp = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      dq += tab.b_bar[i] * forces[i][k];
      dp += tab.b_prime[i] * forces[i][k];
    }
    out.q[k] = q[k] + h * p[k] + h2 * dq;
    out.p[k] = p[k] + h * dp;
  }
  return out;
}

Trajectory integrate(const RKNTableau& tab, const SecondOrderProblem& pr, double t0,
                     const Vector& q0, const Vector& p0, double h, long long n_steps,
                     const SolverConfig& cfg) {
  cfg.validate();
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  Trajectory tr;
  tr.times.push_back(t0);
  tr.q.push_back(q0);
  tr.p.push_back(p0);
  tr.iterations.reserve(static_cast<std::size_t>(n_steps));

  Vector q = q0, p = p0;
  for (long long k = 0; k < n_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    StepResult r;
    try {
      r = rkn_step(tab, pr, t, q, p, h, cfg);
    } catch (SolverError& e) {
      e.set_step(k);
      throw;
    }
    q = std::move(r.q);
    p = std::move(r.p);
    tr.iterations.push_back(r.iterations);
    const long long done = k + 1;
    if (done % cfg.record_every == 0 || done == n_steps) {
      tr.times.push_back(t0 + static_cast<double>(done) * h);
      tr.q.push_back(q);
      tr.p.push_back(p);
    }
  }
  return tr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr, const SecondOrderProblem& pr) {
  os << 't';
  for (int k = 1; k <= pr.dim; ++k) os << ",q" << k;
  for (int k = 1; k <= pr.dim; ++k) os << ",p" << k;
  for (const auto& inv : pr.invariants) os << ',' << inv.name << "_err";
  os << '\n';

  std::vector<std::vector<double>> drifts;
  for (const auto& inv : pr.invariants) drifts.push_back(invariant_drift(tr, inv));
  for (std::size_t r = 0; r < tr.size(); ++r) {
    os << format_double(tr.times[r]);
    for (double x : tr.q[r]) os << ',' << format_double(x);
    for (double x : tr.p[r]) os << ',' << format_double(x);
    for (const auto& d : drifts) os << ',' << format_double(d[r]);
    os << '\n';
  }
}

}  // namespace csrkn
