#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csrkn/linalg.hpp"
#include "csrkn/ortho_basis.hpp"
#include "csrkn/polynomial.hpp"
#include "csrkn/quadrature.hpp"

namespace csrkn {

class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what, std::optional<std::size_t> equation = {})
      : std::runtime_error(what), equation_(equation) {}
  /// Index of the offending equation in the assembled alpha system, if any.
  std::optional<std::size_t> equation() const { return equation_; }

 private:
  std::optional<std::size_t> equation_;
};

using AlphaKey = std::pair<int, int>;

/// Parameters of the symplectic ansatz
///   B_tau = sum_{j<xi} (int_0^1 P_j) P_j(tau) + sum_{j>=xi} lambda_j P_j(tau)
///   Abar  = B_sigma (a00 + a01 P_1(sigma) + a10 P_1(tau) + sum_{i+j>1} a_ij P_i(tau) P_j(sigma))
/// with i <= rho, j <= xi - eta + 1 and a_ij = a_ji for i+j > 1.
struct ConstructionSpec {
  FamilyKind family = FamilyKind::ShiftedLegendre;
  int xi = 3;   // B(xi)
  int eta = 2;  // CN(eta)
  int rho = 2;  // tau-degree cap
  /// Pinned alpha values; key (i,j) with (j,i) equivalent for i+j > 1.
  std::map<AlphaKey, double> alpha_params;
  /// lambda_j for j >= xi (default 0).
  std::map<int, double> lambda_params;
  /// Impose a01 = -a10 = -<x,P_1>/2, a_ij = 0 for odd i+j > 1, lambda_j = 0 for odd j >= xi.
  bool symmetric = false;
  /// Reject solutions where an undetermined alpha is not listed in alpha_params.
  bool strict_free = false;

  /// min(rho, xi - eta + 1): alpha_ij vanishes for i > r or j > r.
  int r() const;
  /// (r+1)(r+2)/2.
  int free_slots() const;
  /// Throws ConstructionError if xi < 2 eta - 1, rho < eta or eta < 1.
  void validate() const;
};

/// Symmetric-in-(i,j) coefficient table, except for the (0,1)/(1,0) pair.
struct AlphaCoefficients {
  int r = 0;
  DenseMatrix<Real> values;             // (r+1) x (r+1)
  std::vector<AlphaKey> defaulted;      // unknowns no equation determined (set to 0)

  Real operator()(int i, int j) const;
};

/// Continuous-stage coefficients: C_tau = tau, B_tau, Bbar_tau = B_tau (1 - tau), Abar_{tau,sigma}.
struct CsRKNCoefficients {
  FamilyKind family = FamilyKind::ShiftedLegendre;
  std::vector<Real> lambda;
  AlphaCoefficients alpha;
  Polynomial b;                // B_tau
  BivariatePolynomial a_bar;   // Abar_{tau,sigma}

  Real B(const Real& tau) const { return b(tau); }
  Real B_bar(const Real& tau) const { return b(tau) * (Real(1) - tau); }
  Real A_bar(const Real& tau, const Real& sigma) const { return a_bar(tau, sigma); }

  int degree_b() const { return b.degree(); }
  int degree_a_tau() const { return a_bar.degree_tau(); }
  int degree_a_sigma() const { return a_bar.degree_sigma(); }
};

struct TableauProvenance {
  std::string method;
  FamilyKind family = FamilyKind::ShiftedLegendre;
  std::optional<ConstructionSpec> spec;
  double gamma = 0.0;
};

/// Discrete RKN method; a_bar, b_bar and b_prime already carry the quadrature weights.
struct RKNTableau {
  Vector c;
  Matrix a_bar;
  Vector b_bar;
  Vector b_prime;
  std::optional<TableauProvenance> provenance;

  int stages() const { return static_cast<int>(c.size()); }
};

std::vector<Real> build_B(const OrthonormalBasis& basis, const ConstructionSpec& spec);

AlphaCoefficients solve_alpha(const OrthonormalBasis& basis, const ConstructionSpec& spec);

/// Throws ConstructionError if the continuous symplectic identity
/// B_t Abar_{t,s} - B_s Abar_{s,t} = B_t B_s (t - s) fails on a 20x20 grid.
CsRKNCoefficients assemble(const OrthonormalBasis& basis, const std::vector<Real>& lambda,
                           const AlphaCoefficients& alpha);

/// Max residual of the continuous symplectic identity over an n x n grid.
double continuous_symplectic_residual(const CsRKNCoefficients& coeffs, int n = 20);

RKNTableau discretize(const CsRKNCoefficients& coeffs, const QuadratureRule& rule);

/// Everything produced by one run of the construction pipeline.
struct MethodBundle {
  ConstructionSpec spec;
  OrthonormalBasis basis;
  CsRKNCoefficients coefficients;
  QuadratureRule rule;
  RKNTableau tableau;
};

MethodBundle construct_method(const ConstructionSpec& spec, int stages,
                              std::string name = "custom", double gamma = 0.0);

struct BuiltinInfo {
  std::string_view name;
  FamilyKind family;
  int stages;
  int order;       // classical order of the discrete method
  bool symmetric;  // time-symmetric
};

const std::vector<BuiltinInfo>& builtin_methods();
std::optional<BuiltinInfo> find_builtin(std::string_view name);

/// Named methods legendre4, chebyshev4, hermite4 (gamma-families) and hermite3.
/// Throws std::invalid_argument for unknown names.
MethodBundle builtin_bundle(std::string_view name, double gamma = 0.0);
RKNTableau builtin(std::string_view name, double gamma = 0.0);

/// Plain-text tableau, 17 significant digits, row-major aBar.
void write_tableau(std::ostream& os, const RKNTableau& tableau);
RKNTableau read_tableau(std::istream& is);

}  // namespace csrkn
