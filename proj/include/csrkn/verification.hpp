#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "csrkn/construction.hpp"
#include "csrkn/integrator.hpp"
#include "csrkn/problems.hpp"

namespace csrkn {

/// Residual tolerance under which a condition counts as satisfied.
inline constexpr double kConditionTolerance = 1e-10;

/// Residuals are indexed by kappa - 1: b[k] belongs to B-condition kappa = k + 1.
struct ConditionReport {
  std::vector<double> b;
  std::vector<double> cn;
  std::vector<double> dn;
  double bbar_residual = 0.0;  // |bBar_i - bPrime_i (1 - c_i)|, discrete only
  std::optional<double> symplectic_residual;
  std::optional<double> symmetry_residual;  // empty: not applicable
  bool symmetry_applicable = false;
  bool discrete = false;
  int predicted_order = 0;

  /// Number of leading residuals below kConditionTolerance.
  int b_holds() const;
  int cn_holds() const;
  int dn_holds() const;
};

/// B(xi), CN(eta), DN(zeta) of the continuous coefficients by exact moment
/// integration. CN carries the weight in sigma, DN only in tau. Residuals are
/// the largest monomial coefficient of (lhs - rhs). predicted_order uses the
/// measured prefixes: min(rho, 2 alpha + 2, alpha + beta) with rho = #B,
/// alpha = #CN + 1, beta = #DN + 1.
ConditionReport check_continuous(const CsRKNCoefficients& coeffs, const OrthonormalBasis& basis,
                                 int xi, int eta, std::optional<int> zeta = std::nullopt);

/// Lower bound on the order of the s-stage discretization of coeffs with a
/// quadrature rule of order p:
///   rho   = min(xi, p - deg B)
///   alpha = min(eta, p - deg_sigma Abar + 1)
///   beta  = min(zeta, p - deg_tau Abar - deg B + 1)
/// where xi, eta, zeta are the largest orders for which the continuous
/// conditions hold (searched up to probe).
struct OrderBound {
  int xi = 0, eta = 0, zeta = 0;
  int rho = 0, alpha = 0, beta = 0;
  int order = 0;
};
OrderBound quadrature_order_bound(const CsRKNCoefficients& coeffs, const OrthonormalBasis& basis,
                                  int p, int probe = 8);

/// Discrete conditions for kappa = 1..max_kappa, the bBar identity, symplectic
/// residual and (when applicable) symmetry residual.
ConditionReport check_discrete(const RKNTableau& tableau, int max_kappa = 6);

/// max_ij |bPrime_i (bBar_j - aBar_ij) - bPrime_j (bBar_i - aBar_ji)| together
/// with max_i |bBar_i - bPrime_i (1 - c_i)|.
double check_symplectic(const RKNTableau& tableau);

/// Tableau of the adjoint method (stage order reversed).
RKNTableau adjoint_tableau(const RKNTableau& tableau);

/// Max entry-wise |adjoint - original|; empty when the provenance family has a
/// weight that is not symmetric about 1/2. Tableaux without provenance are checked.
std::optional<double> check_symmetric(const RKNTableau& tableau);

struct OrderEstimate {
  std::vector<double> h;
  std::vector<double> errors;  // max-norm over q and q' at T
  std::vector<double> slopes;  // log2(e_k / e_{k+1})
  double mean_slope = 0.0;
};

/// Step-halving study h = h0 / 2^k, k < levels, integrating from the problem's
/// initial state to T.
OrderEstimate empirical_order(const RKNTableau& tableau, const SecondOrderProblem& problem,
                              double h0, int levels, double T = 1.0, const SolverConfig& cfg = {});

void render_report(std::ostream& os, const ConditionReport& report);

/// Rows condition,kappa,residual.
void write_report_csv(std::ostream& os, const ConditionReport& report);

}  // namespace csrkn
