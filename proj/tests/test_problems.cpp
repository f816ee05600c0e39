#include <doctest.h>

#include <cmath>
#include <random>

#include "csrkn/problems.hpp"

using namespace csrkn;

namespace {

const double kPi = std::acos(-1.0);

double scalar(const SecondOrderProblem& pr, const char* name, const State& st) {
  return pr.find_invariant(name)->eval(st.q, st.p).at(0);
}

// Fourth-order derivative estimate by Richardson extrapolation of central differences.
template <class F>
double derivative(F&& f, double t, double h = 1e-3) {
  auto d = [&](double k) { return (f(t + k) - f(t - k)) / (2 * k); };
  return (4 * d(h / 2) - d(h)) / 3;
}

double potential(const SecondOrderProblem& pr, const Vector& q) {
  const Vector zero(q.size(), 0.0);
  return pr.hamiltonian(q, zero);
}

void check_gradient(const SecondOrderProblem& pr, double lo, double hi) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(lo, hi);
  for (int trial = 0; trial < 20; ++trial) {
    Vector q(pr.dim);
    for (auto& x : q) x = u(rng);
    const Vector f = pr.f(0.0, q);
    for (int k = 0; k < pr.dim; ++k) {
      const double h = 1e-6;
      Vector a = q, b = q;
      a[k] += h;
      b[k] -= h;
      const double grad = (potential(pr, a) - potential(pr, b)) / (2 * h);
      CHECK(std::abs(f[k] + grad) <= 1e-6 * std::max(1.0, std::abs(f[k])));
    }
  }
}

}  // namespace

TEST_CASE("Kepler invariants at the initial state") {
  const auto k = kepler();
  CHECK(k.dim == 2);
  CHECK(scalar(k, "H", k.initial) == -0.5);
  CHECK(scalar(k, "angmom", k.initial) == 1.0);
  const Vector rlp = k.find_invariant("rlp")->eval(k.initial.q, k.initial.p);
  REQUIRE(rlp.size() == 3);
  for (double x : rlp) CHECK(x == 0.0);
}

TEST_CASE("Kepler exact orbit") {
  const auto k = kepler();
  const State s = k.exact(kPi / 2);
  CHECK(std::abs(s.q[0]) < 1e-15);
  CHECK(s.q[1] == doctest::Approx(1.0));
  CHECK(s.p[0] == doctest::Approx(-1.0));
  CHECK(std::abs(s.p[1]) < 1e-15);
  for (int i = 0; i < 20; ++i) {
    const double t = 0.37 * i;
    const State e = k.exact(t);
    for (double x : k.find_invariant("rlp")->eval(e.q, e.p)) CHECK(std::abs(x) < 1e-15);
    CHECK(scalar(k, "H", e) == doctest::Approx(-0.5).epsilon(1e-15));
  }
}

TEST_CASE("exact solutions satisfy q'' = f") {
  for (const auto& pr : {kepler(), harmonic(), harmonic(0.3, -1.2)}) {
    CAPTURE(pr.name);
    for (int i = 0; i < 20; ++i) {
      const double t = 0.05 + 0.31 * i;
      const State e = pr.exact(t);
      const Vector f = pr.f(t, e.q);
      for (int c = 0; c < pr.dim; ++c) {
        const double dq = derivative([&](double s) { return pr.exact(s).q[c]; }, t);
        const double dp = derivative([&](double s) { return pr.exact(s).p[c]; }, t);
        CHECK(std::abs(dq - e.p[c]) < 1e-10);
        CHECK(std::abs(dp - f[c]) < 1e-10);
      }
    }
  }
}

TEST_CASE("Henon-Heiles force and energy") {
  const auto hh = henon_heiles();
  const Vector f0 = hh.f(0.0, Vector{0.0, 0.0});
  CHECK(f0[0] == 0.0);
  CHECK(f0[1] == 0.0);
  const Vector f = hh.f(0.0, hh.initial.q);
  CHECK(std::abs(f[0]) < 1e-17);
  CHECK(f[1] == doctest::Approx(0.74).epsilon(1e-15));
  // 0.13 - 0.005 + 0.125/3: the initial state sits at the escape energy 1/6.
  CHECK(hh.hamiltonian(hh.initial.q, hh.initial.p) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK_FALSE(static_cast<bool>(hh.exact));
}

TEST_CASE("forces are minus the potential gradient") {
  check_gradient(kepler(), 0.5, 1.5);
  check_gradient(henon_heiles(), -0.6, 0.6);
  check_gradient(harmonic(), -2.0, 2.0);
}

TEST_CASE("harmonic oscillator") {
  const auto h = harmonic();
  const State s = h.exact(2 * kPi);
  CHECK(s.q[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s.p[0]) < 1e-15);
  for (double t : {0.0, 0.4, 1.9, 5.0}) CHECK(scalar(h, "H", h.exact(t)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("invariant drift along a sampled exact orbit") {
  const auto k = kepler();
  Trajectory tr;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.2 * i;
    const State e = k.exact(t);
    tr.times.push_back(t);
    tr.q.push_back(e.q);
    tr.p.push_back(e.p);
  }
  for (const auto& inv : k.invariants) {
    const auto d = invariant_drift(tr, inv);
    REQUIRE(d.size() == tr.size());
    for (double x : d) CHECK(x < 1e-15);
  }
}

TEST_CASE("vector invariant drift uses the max norm") {
  Invariant inv{"v", [](std::span<const double> q, std::span<const double>) {
                  return Vector{q[0], -2 * q[0]};
                }};
  Trajectory tr;
  tr.times = {0.0, 1.0};
  tr.q = {{1.0}, {1.5}};
  tr.p = {{0.0}, {0.0}};
  const auto d = invariant_drift(tr, inv);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 1.0);
}

TEST_CASE("problem lookup") {
  CHECK(problem_by_name("kepler")->name == "kepler");
  CHECK(problem_by_name("henon-heiles")->name == "henon_heiles");
  CHECK(problem_by_name("harmonic")->dim == 1);
  CHECK_FALSE(problem_by_name("lorenz").has_value());
}
