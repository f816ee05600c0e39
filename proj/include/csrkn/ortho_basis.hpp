#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "csrkn/polynomial.hpp"
#include "csrkn/real.hpp"

namespace csrkn {

/// Weighted orthogonal polynomial families.
///
///   ShiftedLegendre    I = [0,1],   w(x) = 1
///   ShiftedChebyshev1  I = [0,1],   w(x) = 1 / (2 sqrt(x(1-x)))
///   ShiftedHermite     I = R,       w(x) = exp(-(2x-1)^2)
///   StandardHermite    I = R,       w(x) = exp(-x^2)
enum class FamilyKind { ShiftedLegendre, ShiftedChebyshev1, ShiftedHermite, StandardHermite };

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

/// True iff w(x) == w(1-x).
bool has_symmetric_weight(FamilyKind kind);

/// Closed interval bounds of I (infinite for the Hermite families).
double interval_lower(FamilyKind kind);
double interval_upper(FamilyKind kind);

double weight(FamilyKind kind, double x);

inline constexpr int kMaxBasisDegree = 12;

/// Orthonormal recurrence x P_n = a_{n+1} P_{n+1} + b_n P_n + a_n P_{n-1}.
struct Recurrence {
  std::vector<Real> diagonal;      // b_0 .. b_N
  std::vector<Real> off_diagonal;  // a_1 .. a_N (off_diagonal[n] = a_{n+1})
};

/// P_0 .. P_max_degree, orthonormal in L^2_w(I), positive leading coefficients.
/// Immutable after construction.
class OrthonormalBasis {
 public:
  FamilyKind kind() const { return kind_; }
  int max_degree() const { return max_degree_; }

  const Polynomial& poly(int n) const;
  double eval(int n, double x) const { return poly(n).eval(x); }

  /// m_k = int_I x^k w(x) dx, available for k <= 2 max_degree + 2.
  const Real& moment(int k) const;
  int max_moment() const { return static_cast<int>(moments_.size()) - 1; }

  const Recurrence& recurrence() const { return recurrence_; }

 private:
  friend OrthonormalBasis make_basis(FamilyKind kind, int max_degree);
  FamilyKind kind_ = FamilyKind::ShiftedLegendre;
  int max_degree_ = 0;
  std::vector<Polynomial> polys_;
  std::vector<Real> moments_;
  Recurrence recurrence_;
};

/// Throws std::invalid_argument unless 0 <= max_degree <= kMaxBasisDegree.
OrthonormalBasis make_basis(FamilyKind kind, int max_degree);

/// int_I p w dx from the stored moments. Throws std::domain_error if deg p
/// exceeds the stored moments.
Real weighted_integral(const OrthonormalBasis& basis, const Polynomial& p);

/// <p, q>_w; requires deg p + deg q <= 2 max_degree + 2.
Real inner_product(const OrthonormalBasis& basis, const Polynomial& p, const Polynomial& q);

/// int_0^1 P_n(x) dx. The range is [0,1] for every family.
Real unit_interval_integral(const OrthonormalBasis& basis, int n);

/// tau -> int_0^tau int_0^alpha P_n(x) dx dalpha, degree n + 2.
Polynomial double_primitive(const OrthonormalBasis& basis, int n);

/// Coefficients of p in the basis, c_k = <p, P_k>_w for k <= deg p.
std::vector<Real> expand_in_basis(const OrthonormalBasis& basis, const Polynomial& p);

}  // namespace csrkn
