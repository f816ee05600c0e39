#include "csrkn/construction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csrkn {

namespace {

// Relative tolerance for pivots and for consistency of over-determined alpha
// systems. Pinned parameters arrive as doubles, so this sits near double eps.
const Real kSystemTolerance = Real(1e-12);

std::string key_string(int i, int j) {
  return "alpha(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// One unknown of the alpha system. For i + j > 1 it stands for both (i,j) and (j,i).
struct Unknown {
  int i;
  int j;
};

std::vector<Unknown> alpha_unknowns(int r) {
  std::vector<Unknown> u{{0, 0}, {0, 1}, {1, 0}};
  for (int d = 2; d <= 2 * r; ++d)
    for (int i = 0; i <= d / 2; ++i)
      if (d - i <= r) u.push_back({i, d - i});
  return u;
}

struct Term {
  Polynomial tau_factor;
  Polynomial sigma_factor;
};

// The ansatz keeps alpha_00, alpha_01 P_1(sigma) and alpha_10 P_1(tau) free of P_0 factors.
std::vector<Term> unknown_terms(const OrthonormalBasis& basis, const Unknown& u) {
  const Polynomial one = Polynomial::constant(Real(1));
  if (u.i == 0 && u.j == 0) return {{one, one}};
  if (u.i == 0 && u.j == 1) return {{one, basis.poly(1)}};
  if (u.i == 1 && u.j == 0) return {{basis.poly(1), one}};
  if (u.i == u.j) return {{basis.poly(u.i), basis.poly(u.j)}};
  return {{basis.poly(u.i), basis.poly(u.j)}, {basis.poly(u.j), basis.poly(u.i)}};
}

std::size_t unknown_index(const std::vector<Unknown>& unknowns, int i, int j) {
  if (i + j > 1 && i > j) std::swap(i, j);
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (unknowns[k].i == i && unknowns[k].j == j) return k;
  return unknowns.size();
}

struct LinearSystem {
  std::vector<std::vector<Real>> rows;
  std::vector<Real> rhs;
  std::vector<std::string> labels;

  void add(std::vector<Real> row, Real value, std::string label) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
    labels.push_back(std::move(label));
  }
};

Real x_dot_p1(const OrthonormalBasis& basis) {
  return inner_product(basis, Polynomial::monomial(1), basis.poly(1));
}

}  // namespace

int ConstructionSpec::r() const { return std::min(rho, xi - eta + 1); }

int ConstructionSpec::free_slots() const { return (r() + 1) * (r() + 2) / 2; }

void ConstructionSpec::validate() const {
  if (eta < 1) throw ConstructionError("eta must be >= 1");
  if (xi < 2 * eta - 1) throw ConstructionError("ansatz requires xi >= 2*eta - 1");
  if (rho < eta) throw ConstructionError("ansatz requires rho >= eta");
}

Real AlphaCoefficients::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i > r || j > r) return Real(0);
  return values(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

std::vector<Real> build_B(const OrthonormalBasis& basis, const ConstructionSpec& spec) {
  spec.validate();
  int top = spec.xi - 1;
  for (const auto& [j, value] : spec.lambda_params) {
    if (j < spec.xi)
      throw ConstructionError("lambda_" + std::to_string(j) + " is fixed by B(xi) and cannot be set");
    if (spec.symmetric && j % 2 == 1 && value != 0.0)
      throw ConstructionError("symmetric construction requires lambda_" + std::to_string(j) + " = 0");
    top = std::max(top, j);
  }
  if (top > basis.max_degree())
    throw ConstructionError("B_tau needs degree " + std::to_string(top) + " beyond the basis");

  std::vector<Real> lambda(static_cast<std::size_t>(top) + 1, Real(0));
  Real scale = 0;
  for (int j = 0; j < spec.xi; ++j) {
    lambda[j] = unit_interval_integral(basis, j);
    scale = std::max(scale, Real(abs(lambda[j])));
  }
  // Integrals that vanish by reflection come out at rounding level; keep deg B honest.
  for (int j = 0; j < spec.xi; ++j)
    if (abs(lambda[j]) < Real(1e-28) * scale) lambda[j] = 0;
  for (const auto& [j, value] : spec.lambda_params) lambda[j] = Real(value);
  return lambda;
}

AlphaCoefficients solve_alpha(const OrthonormalBasis& basis, const ConstructionSpec& spec) {
  spec.validate();
  const int r = spec.r();
  if (r + 2 > basis.max_degree() || spec.eta > basis.max_degree())
    throw ConstructionError("basis degree too small for the requested ansatz");

  const auto unknowns = alpha_unknowns(r);
  const std::size_t n = unknowns.size();
  std::vector<std::vector<Term>> terms;
  for (const auto& u : unknowns) terms.push_back(unknown_terms(basis, u));

  LinearSystem sys;

  // CN(eta) with test functions P_k, matched coefficient-wise in {P_m(tau)}.
  for (int k = 0; k <= spec.eta - 2; ++k) {
    const Polynomial& pk = basis.poly(k);
    const Polynomial rhs_poly = double_primitive(basis, k);
    const int top = std::max(r, k + 2);
    for (int m = 0; m <= top; ++m) {
      const Polynomial& pm = basis.poly(m);
      std::vector<Real> row(n, Real(0));
      for (std::size_t u = 0; u < n; ++u) {
        for (const auto& t : terms[u]) {
          const Real proj = inner_product(basis, t.tau_factor, pm);
          if (proj == 0) continue;
          row[u] += proj * (t.sigma_factor * pk).integral(Real(0), Real(1));
        }
      }
      sys.add(std::move(row), inner_product(basis, rhs_poly, pm),
              "CN test function P_" + std::to_string(k) + ", coefficient of P_" +
                  std::to_string(m) + "(tau)");
    }
  }

  const Real xp1 = x_dot_p1(basis);
  const std::size_t i01 = unknown_index(unknowns, 0, 1);
  const std::size_t i10 = unknown_index(unknowns, 1, 0);
  {
    std::vector<Real> row(n, Real(0));
    row[i01] = 1;
    row[i10] = -1;
    sys.add(std::move(row), -xp1, "symplectic: alpha(0,1) - alpha(1,0) = -<x,P_1>");
  }

  if (spec.symmetric) {
    std::vector<Real> row(n, Real(0));
    row[i01] = 1;
    sys.add(std::move(row), -xp1 / 2, "symmetric: alpha(0,1) = -<x,P_1>/2");
    for (std::size_t u = 0; u < n; ++u) {
      const int d = unknowns[u].i + unknowns[u].j;
      if (d > 1 && d % 2 == 1) {
        std::vector<Real> zero_row(n, Real(0));
        zero_row[u] = 1;
        sys.add(std::move(zero_row), Real(0),
                "symmetric: " + key_string(unknowns[u].i, unknowns[u].j) + " = 0");
      }
    }
  }

  for (const auto& [key, value] : spec.alpha_params) {
    const auto [i, j] = key;
    const std::size_t idx = unknown_index(unknowns, i, j);
    if (idx == n) {
      if (value == 0.0) continue;
      throw ConstructionError(key_string(i, j) + " lies outside the ansatz (r = " +
                              std::to_string(r) + ")");
    }
    std::vector<Real> row(n, Real(0));
    row[idx] = 1;
    sys.add(std::move(row), Real(value), "parameter " + key_string(i, j));
  }

  DenseMatrix<Real> a(sys.rows.size(), n);
  for (std::size_t e = 0; e < sys.rows.size(); ++e)
    for (std::size_t u = 0; u < n; ++u) a(e, u) = sys.rows[e][u];
  const auto solved =
      reduce_and_solve(std::move(a), sys.rhs, std::vector<Real>(n, Real(0)), kSystemTolerance);

  if (solved.inconsistent_row) {
    const std::size_t e = *solved.inconsistent_row;
    throw ConstructionError("alpha system inconsistent at equation " + std::to_string(e) + " (" +
                                sys.labels[e] + ")",
                            e);
  }

  AlphaCoefficients alpha;
  alpha.r = r;
  alpha.values = DenseMatrix<Real>(static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(r) + 1);
  for (std::size_t u = 0; u < n; ++u) {
    const auto [i, j] = unknowns[u];
    alpha.values(i, j) = solved.x[u];
    if (i + j > 1) alpha.values(j, i) = solved.x[u];
  }
  std::vector<std::string> undeclared;
  for (std::size_t col : solved.free_columns) {
    const auto [i, j] = unknowns[col];
    alpha.defaulted.emplace_back(i, j);
    const bool declared = spec.alpha_params.count({i, j}) || spec.alpha_params.count({j, i});
    if (!declared) undeclared.push_back(key_string(i, j));
  }
  if (spec.strict_free && !undeclared.empty()) {
    std::string list;
    for (const auto& s : undeclared) list += (list.empty() ? "" : ", ") + s;
    throw ConstructionError("alpha system rank deficient beyond declared parameters: " + list);
  }
  return alpha;
}

CsRKNCoefficients assemble(const OrthonormalBasis& basis, const std::vector<Real>& lambda,
                           const AlphaCoefficients& alpha) {
  CsRKNCoefficients out;
  out.family = basis.kind();
  out.lambda = lambda;
  out.alpha = alpha;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    out.b += lambda[j] * basis.poly(static_cast<int>(j));

  const Polynomial one = Polynomial::constant(Real(1));
  for (int i = 0; i <= alpha.r; ++i) {
    for (int j = 0; j <= alpha.r; ++j) {
      const Real v = alpha(i, j);
      if (v == 0) continue;
      const bool low = i + j <= 1;
      const Polynomial& f = (low && i == 0) ? one : basis.poly(i);
      const Polynomial& g = (low && j == 0) ? one : basis.poly(j);
      out.a_bar.add_outer(v * f, out.b * g);
    }
  }

  const double residual = continuous_symplectic_residual(out);
  if (!(residual < 1e-12))
    throw ConstructionError("continuous symplectic identity violated (residual " +
                            std::to_string(residual) + ")");
  return out;
}

double continuous_symplectic_residual(const CsRKNCoefficients& coeffs, int n) {
  const bool finite = std::isfinite(interval_lower(coeffs.family));
  const Real lo = finite ? Real(0) : Real(-1.5);
  const Real hi = finite ? Real(1) : Real(2.5);
  Real worst = 0;
  for (int a = 0; a < n; ++a) {
    const Real t = lo + (hi - lo) * a / (n - 1);
    for (int b = 0; b < n; ++b) {
      const Real s = lo + (hi - lo) * b / (n - 1);
      const Real lhs = coeffs.B(t) * coeffs.A_bar(t, s) - coeffs.B(s) * coeffs.A_bar(s, t);
      const Real rhs = coeffs.B(t) * coeffs.B(s) * (t - s);
      const Real scale = 1 + abs(rhs) + abs(coeffs.B(t) * coeffs.A_bar(t, s));
      worst = std::max(worst, Real(abs(lhs - rhs) / scale));
    }
  }
  return to_double(worst);
}

RKNTableau discretize(const CsRKNCoefficients& coeffs, const QuadratureRule& rule) {
  if (coeffs.family != rule.family)
    throw std::invalid_argument("discretize: quadrature family " +
                                std::string(family_name(rule.family)) +
                                " does not match coefficients family " +
                                std::string(family_name(coeffs.family)));
  const std::size_t s = static_cast<std::size_t>(rule.points);
  RKNTableau t;
  t.c = rule.nodes;
  t.a_bar = Matrix(s, s);
  t.b_bar.resize(s);
  t.b_prime.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Real ci(rule.nodes[i]);
    const Real bi(rule.weights[i]);
    for (std::size_t j = 0; j < s; ++j)
      t.a_bar(i, j) = to_double(Real(rule.weights[j]) * coeffs.A_bar(ci, Real(rule.nodes[j])));
    t.b_bar[i] = to_double(bi * coeffs.B_bar(ci));
    t.b_prime[i] = to_double(bi * coeffs.B(ci));
  }
  return t;
}

MethodBundle construct_method(const ConstructionSpec& spec, int stages, std::string name,
                              double gamma) {
  OrthonormalBasis basis = make_basis(spec.family, kMaxBasisDegree);
  const auto lambda = build_B(basis, spec);
  const auto alpha = solve_alpha(basis, spec);
  CsRKNCoefficients coeffs = assemble(basis, lambda, alpha);
  QuadratureRule rule = gauss_rule(basis, stages);
  RKNTableau tableau = discretize(coeffs, rule);
  tableau.provenance = TableauProvenance{std::move(name), spec.family, spec, gamma};
  return {spec, std::move(basis), std::move(coeffs), std::move(rule), std::move(tableau)};
}

const std::vector<BuiltinInfo>& builtin_methods() {
  static const std::vector<BuiltinInfo> methods{
      {"legendre4", FamilyKind::ShiftedLegendre, 2, 4, true},
      {"chebyshev4", FamilyKind::ShiftedChebyshev1, 3, 4, true},
      {"hermite4", FamilyKind::ShiftedHermite, 3, 4, true},
      {"hermite3", FamilyKind::StandardHermite, 3, 3, false},
  };
  return methods;
}

std::optional<BuiltinInfo> find_builtin(std::string_view name) {
  for (const auto& m : builtin_methods())
    if (m.name == name) return m;
  return std::nullopt;
}

MethodBundle builtin_bundle(std::string_view name, double gamma) {
  const auto info = find_builtin(name);
  if (!info) throw std::invalid_argument("unknown method '" + std::string(name) + "'");

  ConstructionSpec spec;
  spec.family = info->family;
  spec.xi = 3;
  spec.eta = 2;
  spec.rho = 2;
  spec.strict_free = true;
  // alpha_ij = 0 for 0 <= i,j <= 2, i + j > 2.
  spec.alpha_params[{1, 2}] = 0.0;
  spec.alpha_params[{2, 2}] = 0.0;

  // gamma scales alpha_11 = mu through the corner entries b_1 B_1 P_1(c_1)^2.
  const double pi = std::acos(-1.0);
  switch (info->family) {
    case FamilyKind::ShiftedLegendre:
      spec.alpha_params[{1, 1}] = 2.0 * gamma;
      break;
    case FamilyKind::ShiftedChebyshev1:
      spec.alpha_params[{1, 1}] = 1.5 * pi * gamma;
      break;
    case FamilyKind::ShiftedHermite:
      spec.alpha_params[{1, 1}] = 1.5 * std::sqrt(pi) * gamma;
      break;
    case FamilyKind::StandardHermite: {
      // Imposed alpha_01 = -<x,H_1>/2; alpha_11 then follows from CN(2).
      const auto basis = make_basis(FamilyKind::StandardHermite, 2);
      spec.alpha_params[{0, 1}] = -0.5 * to_double(x_dot_p1(basis));
      gamma = 0.0;
      break;
    }
  }
  return construct_method(spec, info->stages, std::string(info->name), gamma);
}

RKNTableau builtin(std::string_view name, double gamma) {
  return builtin_bundle(name, gamma).tableau;
}

}  // namespace csrkn
