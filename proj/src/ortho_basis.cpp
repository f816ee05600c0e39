#include "csrkn/ortho_basis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace csrkn {

namespace {

struct StandardFamily {
  std::vector<Real> diagonal;
  std::vector<Real> off_diagonal;
};

// Orthonormal recurrences of the unshifted families on [-1,1] or R. All three
// have even weights, so the diagonal vanishes.
StandardFamily standard_recurrence(FamilyKind kind, int n) {
  StandardFamily f{std::vector<Real>(n + 1, Real(0)), std::vector<Real>(n, Real(0))};
  for (int k = 1; k <= n; ++k) {
    Real a;
    switch (kind) {
      case FamilyKind::ShiftedLegendre:
        a = Real(k) / sqrt(Real(4 * k * k - 1));
        break;
      case FamilyKind::ShiftedChebyshev1:
        a = k == 1 ? sqrt(Real(0.5)) : Real(0.5);
        break;
      case FamilyKind::ShiftedHermite:
      case FamilyKind::StandardHermite:
        a = sqrt(Real(k) / 2);
        break;
    }
    f.off_diagonal[k - 1] = a;
  }
  return f;
}

Recurrence family_recurrence(FamilyKind kind, int n) {
  StandardFamily f = standard_recurrence(kind, n);
  if (kind == FamilyKind::StandardHermite) return {f.diagonal, f.off_diagonal};
  // y = 2x - 1: x P = (y + 1)/2 P halves the off-diagonal and shifts the diagonal.
  Recurrence r;
  for (const auto& b : f.diagonal) r.diagonal.push_back((b + 1) / 2);
  for (const auto& a : f.off_diagonal) r.off_diagonal.push_back(a / 2);
  return r;
}

std::vector<Real> standard_hermite_moments(int kmax) {
  std::vector<Real> m(kmax + 1, Real(0));
  m[0] = sqrt(pi_real());
  for (int k = 2; k <= kmax; k += 2) m[k] = m[k - 2] * Real(k - 1) / 2;
  return m;
}

std::vector<Real> family_moments(FamilyKind kind, int kmax) {
  std::vector<Real> m(kmax + 1, Real(0));
  switch (kind) {
    case FamilyKind::ShiftedLegendre:
      for (int k = 0; k <= kmax; ++k) m[k] = Real(1) / Real(k + 1);
      break;
    case FamilyKind::ShiftedChebyshev1:
      m[0] = pi_real() / 2;
      for (int k = 1; k <= kmax; ++k) m[k] = m[k - 1] * Real(2 * k - 1) / Real(2 * k);
      break;
    case FamilyKind::StandardHermite:
      m = standard_hermite_moments(kmax);
      break;
    case FamilyKind::ShiftedHermite: {
      // x = (y + 1)/2, dx = dy/2 against exp(-y^2).
      const auto std_m = standard_hermite_moments(kmax);
      for (int k = 0; k <= kmax; ++k) {
        Real acc = 0;
        Real binom = 1;
        for (int i = 0; i <= k; ++i) {
          acc += binom * std_m[i];
          binom = binom * Real(k - i) / Real(i + 1);
        }
        m[k] = acc / pow(Real(2), k + 1);
      }
      break;
    }
  }
  return m;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ShiftedLegendre: return "shifted_legendre";
    case FamilyKind::ShiftedChebyshev1: return "shifted_chebyshev1";
    case FamilyKind::ShiftedHermite: return "shifted_hermite";
    case FamilyKind::StandardHermite: return "standard_hermite";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (auto k : {FamilyKind::ShiftedLegendre, FamilyKind::ShiftedChebyshev1,
                 FamilyKind::ShiftedHermite, FamilyKind::StandardHermite}) {
    if (family_name(k) == name) return k;
  }
  if (name == "legendre") return FamilyKind::ShiftedLegendre;
  if (name == "chebyshev") return FamilyKind::ShiftedChebyshev1;
  if (name == "hermite") return FamilyKind::StandardHermite;
  return std::nullopt;
}

bool has_symmetric_weight(FamilyKind kind) { return kind != FamilyKind::StandardHermite; }

double interval_lower(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ShiftedLegendre:
    case FamilyKind::ShiftedChebyshev1: return 0.0;
    default: return -std::numeric_limits<double>::infinity();
  }
}

double interval_upper(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ShiftedLegendre:
    case FamilyKind::ShiftedChebyshev1: return 1.0;
    default: return std::numeric_limits<double>::infinity();
  }
}

double weight(FamilyKind kind, double x) {
  switch (kind) {
    case FamilyKind::ShiftedLegendre: return 1.0;
    case FamilyKind::ShiftedChebyshev1: return 0.5 / std::sqrt(x * (1.0 - x));
    case FamilyKind::ShiftedHermite: return std::exp(-(2.0 * x - 1.0) * (2.0 * x - 1.0));
    case FamilyKind::StandardHermite: return std::exp(-x * x);
  }
  return 0.0;
}

const Polynomial& OrthonormalBasis::poly(int n) const {
  if (n < 0 || n > max_degree_)
    throw std::out_of_range("basis degree " + std::to_string(n) + " outside 0.." +
                            std::to_string(max_degree_));
  return polys_[static_cast<std::size_t>(n)];
}

const Real& OrthonormalBasis::moment(int k) const {
  if (k < 0 || k > max_moment())
    throw std::domain_error("moment " + std::to_string(k) + " not stored (max " +
                            std::to_string(max_moment()) + ")");
  return moments_[static_cast<std::size_t>(k)];
}

OrthonormalBasis make_basis(FamilyKind kind, int max_degree) {
  if (max_degree < 0 || max_degree > kMaxBasisDegree)
    throw std::invalid_argument("max_degree must lie in [0, " + std::to_string(kMaxBasisDegree) +
                                "], got " + std::to_string(max_degree));
  OrthonormalBasis basis;
  basis.kind_ = kind;
  basis.max_degree_ = max_degree;
  basis.moments_ = family_moments(kind, 2 * max_degree + 2);
  basis.recurrence_ = family_recurrence(kind, max_degree);

  const auto& b = basis.recurrence_.diagonal;
  const auto& a = basis.recurrence_.off_diagonal;
  basis.polys_.reserve(static_cast<std::size_t>(max_degree) + 1);
  basis.polys_.push_back(Polynomial::constant(Real(1) / sqrt(basis.moments_[0])));
  const Polynomial x = Polynomial::monomial(1);
  for (int n = 0; n < max_degree; ++n) {
    Polynomial next = x * basis.polys_[n] - b[n] * basis.polys_[n];
    if (n > 0) next -= a[n - 1] * basis.polys_[n - 1];
    basis.polys_.push_back(next * (Real(1) / a[n]));
  }
  return basis;
}

Real weighted_integral(const OrthonormalBasis& basis, const Polynomial& p) {
  if (p.degree() > basis.max_moment())
    throw std::domain_error("polynomial degree " + std::to_string(p.degree()) +
                            " exceeds stored moments (" + std::to_string(basis.max_moment()) + ")");
  Real acc = 0;
  for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * basis.moment(k);
  return acc;
}

Real inner_product(const OrthonormalBasis& basis, const Polynomial& p, const Polynomial& q) {
  if (p.degree() + q.degree() > 2 * basis.max_degree() + 2)
    throw std::domain_error("inner_product: deg p + deg q exceeds 2*max_degree+2");
  return weighted_integral(basis, p * q);
}

Real unit_interval_integral(const OrthonormalBasis& basis, int n) {
  return basis.poly(n).integral(Real(0), Real(1));
}

Polynomial double_primitive(const OrthonormalBasis& basis, int n) {
  return basis.poly(n).primitive().primitive();
}

std::vector<Real> expand_in_basis(const OrthonormalBasis& basis, const Polynomial& p) {
  if (p.degree() > basis.max_degree())
    throw std::domain_error("expand_in_basis: degree exceeds basis");
  std::vector<Real> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Real(0));
  for (int k = 0; k <= p.degree(); ++k) c[k] = inner_product(basis, p, basis.poly(k));
  return c;
}

}  // namespace csrkn
