#include "csrkn/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "csrkn/linalg.hpp"

namespace csrkn {

std::vector<Real> interpolatory_weights(const OrthonormalBasis& basis, const Vector& nodes) {
  const std::size_t s = nodes.size();
  std::vector<Real> w(s);
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial ell = Polynomial::constant(Real(1));
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      const Real denom = Real(nodes[i]) - Real(nodes[j]);
      ell = ell * Polynomial(std::vector<Real>{-Real(nodes[j]) / denom, Real(1) / denom});
    }
    w[i] = weighted_integral(basis, ell);
  }
  return w;
}

QuadratureRule gauss_rule(const OrthonormalBasis& basis, int points) {
  if (points < 1 || points > basis.max_degree())
    throw std::invalid_argument("gauss_rule: need 1 <= s <= max_degree, got s = " +
                                std::to_string(points));
  const auto& rec = basis.recurrence();
  std::vector<Real> diag(rec.diagonal.begin(), rec.diagonal.begin() + points);
  std::vector<Real> off(rec.off_diagonal.begin(), rec.off_diagonal.begin() + (points - 1));
  const auto eig = symmetric_tridiagonal_eigen(std::move(diag), std::move(off));

  QuadratureRule rule;
  rule.family = basis.kind();
  rule.points = points;
  const Real m0 = basis.moment(0);
  std::vector<Real> weights_hp(points);
  for (int k = 0; k < points; ++k) {
    rule.nodes.push_back(to_double(eig.values[k]));
    weights_hp[k] = m0 * eig.vectors(0, k) * eig.vectors(0, k);
    rule.weights.push_back(to_double(weights_hp[k]));
  }

  const auto interp = interpolatory_weights(basis, rule.nodes);
  for (int k = 0; k < points; ++k) {
    const double rel = to_double(abs(interp[k] - weights_hp[k]) / abs(weights_hp[k]));
    if (!(rel <= 1e-11))
      throw EigenError("Gauss weight " + std::to_string(k) +
                       " disagrees with interpolatory weight (relative " + std::to_string(rel) + ")");
  }
  return rule;
}

int exactness_degree(const QuadratureRule& rule, const OrthonormalBasis& basis) {
  if (rule.family != basis.kind()) throw std::invalid_argument("exactness_degree: family mismatch");
  int d = -1;
  for (int k = 0; k <= basis.max_moment(); ++k) {
    Real sum = 0;
    for (int i = 0; i < rule.points; ++i) sum += Real(rule.weights[i]) * pow(Real(rule.nodes[i]), k);
    const Real mk = basis.moment(k);
    const Real tol = Real(1e-10) * (abs(mk) > 1 ? Real(abs(mk)) : Real(1));
    if (abs(sum - mk) >= tol) break;
    d = k;
  }
  return d;
}

}  // namespace csrkn
