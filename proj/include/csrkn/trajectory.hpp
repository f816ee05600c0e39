#pragma once

#include <cstddef>
#include <vector>

#include "csrkn/real.hpp"

namespace csrkn {

struct State {
  Vector q;
  Vector p;  // q'
};

/// Recorded orbit. Sample k holds (times[k], q[k], p[k]); iterations has one
/// entry per step taken, recorded or not.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> q;
  std::vector<Vector> p;
  std::vector<int> iterations;

  std::size_t size() const { return times.size(); }
  State state(std::size_t k) const { return {q[k], p[k]}; }
};

}  // namespace csrkn
