#include "csrkn/problems.hpp"

#include <algorithm>
#include <cmath>

namespace csrkn {

Vector SecondOrderProblem::f(double t, std::span<const double> q) const {
  Vector out(static_cast<std::size_t>(dim));
  accel(t, q, out);
  return out;
}

const Invariant* SecondOrderProblem::find_invariant(std::string_view wanted) const {
  for (const auto& inv : invariants)
    if (inv.name == wanted) return &inv;
  return nullptr;
}

namespace {

Invariant hamiltonian_invariant(
    std::function<double(std::span<const double>, std::span<const double>)> h) {
  return {"H", [h = std::move(h)](std::span<const double> q, std::span<const double> p) {
            return Vector{h(q, p)};
          }};
}

}  // namespace

SecondOrderProblem kepler() {
  SecondOrderProblem pr;
  pr.name = "kepler";
  pr.dim = 2;
  pr.accel = [](double, std::span<const double> q, std::span<double> out) {
    const double r = std::hypot(q[0], q[1]);
    const double r3 = r * r * r;
    out[0] = -q[0] / r3;
    out[1] = -q[1] / r3;
  };
  pr.hamiltonian = [](std::span<const double> q, std::span<const double> p) {
    return 0.5 * (p[0] * p[0] + p[1] * p[1]) - 1.0 / std::hypot(q[0], q[1]);
  };
  pr.invariants.push_back(hamiltonian_invariant(pr.hamiltonian));
  pr.invariants.push_back({"angmom", [](std::span<const double> q, std::span<const double> p) {
                             return Vector{q[0] * p[1] - q[1] * p[0]};
                           }});
  // Runge-Lenz-Pauli vector p x (q x p) - q/|q| with q, p embedded in R^3.
  pr.invariants.push_back({"rlp", [](std::span<const double> q, std::span<const double> p) {
                             const double l = q[0] * p[1] - q[1] * p[0];
                             const double r = std::hypot(q[0], q[1]);
                             return Vector{p[1] * l - q[0] / r, -p[0] * l - q[1] / r, 0.0};
                           }});
  pr.exact = [](double t) {
    return State{{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}};
  };
  pr.initial = {{1.0, 0.0}, {0.0, 1.0}};
  return pr;
}

SecondOrderProblem henon_heiles() {
  SecondOrderProblem pr;
  pr.name = "henon_heiles";
  pr.dim = 2;
  pr.accel = [](double, std::span<const double> q, std::span<double> out) {
    out[0] = -q[0] - 2.0 * q[0] * q[1];
    out[1] = -q[1] - q[0] * q[0] + q[1] * q[1];
  };
  pr.hamiltonian = [](std::span<const double> q, std::span<const double> p) {
    return 0.5 * (p[0] * p[0] + p[1] * p[1]) + 0.5 * (q[0] * q[0] + q[1] * q[1]) +
           q[0] * q[0] * q[1] - q[1] * q[1] * q[1] / 3.0;
  };
  pr.invariants.push_back(hamiltonian_invariant(pr.hamiltonian));
  pr.initial = {{0.1, -0.5}, {0.0, 0.0}};
  return pr;
}

SecondOrderProblem harmonic(double q0, double p0) {
  SecondOrderProblem pr;
  pr.name = "harmonic";
  pr.dim = 1;
  pr.accel = [](double, std::span<const double> q, std::span<double> out) { out[0] = -q[0]; };
  pr.hamiltonian = [](std::span<const double> q, std::span<const double> p) {
    return 0.5 * (p[0] * p[0] + q[0] * q[0]);
  };
  pr.invariants.push_back(hamiltonian_invariant(pr.hamiltonian));
  pr.exact = [q0, p0](double t) {
    const double c = std::cos(t), s = std::sin(t);
    return State{{q0 * c + p0 * s}, {-q0 * s + p0 * c}};
  };
  pr.initial = {{q0}, {p0}};
  return pr;
}

std::optional<SecondOrderProblem> problem_by_name(std::string_view name) {
  if (name == "kepler") return kepler();
  if (name == "henon_heiles" || name == "henon-heiles") return henon_heiles();
  if (name == "harmonic") return harmonic();
  return std::nullopt;
}

std::vector<double> invariant_drift(const Trajectory& tr, const Invariant& inv) {
  std::vector<double> out;
  if (tr.size() == 0) return out;
  const Vector ref = inv.eval(tr.q[0], tr.p[0]);
  out.reserve(tr.size());
  for (std::size_t k = 0; k < tr.size(); ++k) {
    const Vector v = inv.eval(tr.q[k], tr.p[k]);
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) d = std::max(d, std::abs(v[i] - ref[i]));
    out.push_back(d);
  }
  return out;
}

}  // namespace csrkn
