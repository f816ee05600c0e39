#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csrkn/trajectory.hpp"

namespace csrkn {

/// Scalar invariants return a single entry; the RLP vector returns three.
struct Invariant {
  std::string name;
  std::function<Vector(std::span<const double> q, std::span<const double> p)> eval;
};

/// q'' = f(t, q) with optional Hamiltonian, first integrals and exact flow.
struct SecondOrderProblem {
  std::string name;
  int dim = 0;
  /// Writes f(t, q) into out (size dim). Must be re-entrant.
  std::function<void(double t, std::span<const double> q, std::span<double> out)> accel;
  std::function<double(std::span<const double> q, std::span<const double> p)> hamiltonian;
  /// First integrals in reporting order; the Hamiltonian, if any, comes first as "H".
  std::vector<Invariant> invariants;
  /// Exact solution through `initial` at t = 0, if known.
  std::function<State(double t)> exact;
  State initial;

  Vector f(double t, std::span<const double> q) const;
  const Invariant* find_invariant(std::string_view name) const;
};

/// Circular Kepler orbit: q(0) = (1, 0), q'(0) = (0, 1).
SecondOrderProblem kepler();

/// Henon-Heiles from q(0) = (0.1, -0.5), q'(0) = 0.
SecondOrderProblem henon_heiles();

/// q'' = -q in one dimension.
SecondOrderProblem harmonic(double q0 = 1.0, double p0 = 0.0);

/// "kepler", "henon_heiles" (or "henon-heiles"), "harmonic".
std::optional<SecondOrderProblem> problem_by_name(std::string_view name);

/// |I(state_k) - I(state_0)| per sample, max-norm for vector invariants.
std::vector<double> invariant_drift(const Trajectory& trajectory, const Invariant& invariant);

}  // namespace csrkn
