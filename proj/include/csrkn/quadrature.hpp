#pragma once

#include "csrkn/ortho_basis.hpp"
#include "csrkn/real.hpp"

namespace csrkn {

/// s-point Gauss-Christoffel rule: nodes are the zeros of P_s, ascending.
struct QuadratureRule {
  FamilyKind family = FamilyKind::ShiftedLegendre;
  int points = 0;
  Vector nodes;
  Vector weights;
};

/// Golub-Welsch on the Jacobi matrix of the family recurrence. The weights are
/// checked against the interpolatory definition b_i = int_I l_i w; a relative
/// disagreement above 1e-11 throws EigenError.
QuadratureRule gauss_rule(const OrthonormalBasis& basis, int points);

/// b_i = int_I l_i(x) w(x) dx for arbitrary distinct nodes.
std::vector<Real> interpolatory_weights(const OrthonormalBasis& basis, const Vector& nodes);

/// Largest d with |sum b_i c_i^k - m_k| < 1e-10 max(1, |m_k|) for all k <= d
/// (-1 if the rule does not even integrate constants).
int exactness_degree(const QuadratureRule& rule, const OrthonormalBasis& basis);

}  // namespace csrkn
