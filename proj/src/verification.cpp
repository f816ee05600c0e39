#include "csrkn/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "csrkn/format.hpp"

namespace csrkn {

namespace {

int leading_holds(const std::vector<double>& residuals) {
  int n = 0;
  while (n < static_cast<int>(residuals.size()) && residuals[n] < kConditionTolerance) ++n;
  return n;
}

int order_from_prefixes(int rho, int alpha, int beta) {
  return std::min({rho, 2 * alpha + 2, alpha + beta});
}

double max_coeff_diff(const Polynomial& a, const Polynomial& b) {
  return to_double((a - b).max_abs_coeff());
}

// Coefficient of sigma^b in Abar, as a polynomial in tau.
Polynomial sigma_slice(const BivariatePolynomial& a, int b) {
  std::vector<Real> c(static_cast<std::size_t>(std::max(a.degree_tau(), 0)) + 1);
  for (int i = 0; i <= a.degree_tau(); ++i) c[i] = a.coeff(i, b);
  return Polynomial(std::move(c));
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

int ConditionReport::b_holds() const { return leading_holds(b); }
int ConditionReport::cn_holds() const { return leading_holds(cn); }
int ConditionReport::dn_holds() const { return leading_holds(dn); }

ConditionReport check_continuous(const CsRKNCoefficients& co, const OrthonormalBasis& basis,
                                 int xi, int eta, std::optional<int> zeta_opt) {
  const int zeta = zeta_opt.value_or(std::min(xi, eta));
  ConditionReport rep;

  for (int k = 1; k <= xi; ++k) {
    const Real lhs = weighted_integral(basis, co.b * Polynomial::monomial(k - 1));
    rep.b.push_back(to_double(abs(lhs - Real(1) / k)));
  }

  for (int k = 1; k <= eta - 1; ++k) {
    const Polynomial test = Polynomial::monomial(k - 1);
    std::vector<Real> lhs(static_cast<std::size_t>(std::max(co.a_bar.degree_tau(), 0)) + 1);
    for (int a = 0; a <= co.a_bar.degree_tau(); ++a)
      lhs[a] = inner_product(basis, co.a_bar.tau_slice(a), test);
    const Polynomial rhs = Polynomial::monomial(k + 1, Real(1) / (k * (k + 1)));
    rep.cn.push_back(max_coeff_diff(Polynomial(std::move(lhs)), rhs));
  }

  for (int k = 1; k <= zeta - 1; ++k) {
    const Polynomial weight_part = co.b * Polynomial::monomial(k - 1);
    std::vector<Real> lhs(static_cast<std::size_t>(std::max(co.a_bar.degree_sigma(), 0)) + 1);
    for (int b = 0; b <= co.a_bar.degree_sigma(); ++b)
      lhs[b] = weighted_integral(basis, weight_part * sigma_slice(co.a_bar, b));
    const Polynomial bracket = Polynomial::monomial(k + 1, Real(1) / (k * (k + 1))) -
                               Polynomial::monomial(1, Real(1) / k) +
                               Polynomial::constant(Real(1) / (k + 1));
    rep.dn.push_back(max_coeff_diff(Polynomial(std::move(lhs)), co.b * bracket));
  }

  rep.symplectic_residual = continuous_symplectic_residual(co);
  rep.predicted_order =
      order_from_prefixes(rep.b_holds(), rep.cn_holds() + 1, rep.dn_holds() + 1);
  return rep;
}

OrderBound quadrature_order_bound(const CsRKNCoefficients& co, const OrthonormalBasis& basis,
                                  int p, int probe) {
  const ConditionReport rep = check_continuous(co, basis, probe, probe + 1, probe + 1);
  OrderBound ob;
  ob.xi = rep.b_holds();
  ob.eta = rep.cn_holds() + 1;
  ob.zeta = rep.dn_holds() + 1;
  const int pi_b = std::max(co.degree_b(), 0);
  const int pi_tau = std::max(co.degree_a_tau(), 0);
  const int pi_sigma = std::max(co.degree_a_sigma(), 0);
  ob.rho = std::min(ob.xi, p - pi_b);
  ob.alpha = std::min(ob.eta, p - pi_sigma + 1);
  ob.beta = std::min(ob.zeta, p - pi_tau - pi_b + 1);
  ob.order = order_from_prefixes(ob.rho, ob.alpha, ob.beta);
  return ob;
}

ConditionReport check_discrete(const RKNTableau& t, int max_kappa) {
  const std::size_t s = static_cast<std::size_t>(t.stages());
  ConditionReport rep;
  rep.discrete = true;
  for (int k = 1; k <= max_kappa; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s; ++i) sum += t.b_prime[i] * ipow(t.c[i], k - 1);
    rep.b.push_back(std::abs(sum - 1.0 / k));

    double cn = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < s; ++j) acc += t.a_bar(i, j) * ipow(t.c[j], k - 1);
      cn = std::max(cn, std::abs(acc - ipow(t.c[i], k + 1) / (k * (k + 1))));
    }
    rep.cn.push_back(cn);

    double dn = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < s; ++i) acc += t.b_prime[i] * ipow(t.c[i], k - 1) * t.a_bar(i, j);
      const double bj = t.b_prime[j], cj = t.c[j];
      const double rhs = bj * ipow(cj, k + 1) / (k * (k + 1)) - bj * cj / k + bj / (k + 1);
      dn = std::max(dn, std::abs(acc - rhs));
    }
    rep.dn.push_back(dn);
  }
  for (std::size_t i = 0; i < s; ++i)
    rep.bbar_residual =
        std::max(rep.bbar_residual, std::abs(t.b_bar[i] - t.b_prime[i] * (1.0 - t.c[i])));
  rep.symplectic_residual = check_symplectic(t);
  rep.symmetry_residual = check_symmetric(t);
  rep.symmetry_applicable = rep.symmetry_residual.has_value();
  rep.predicted_order =
      order_from_prefixes(rep.b_holds(), rep.cn_holds() + 1, rep.dn_holds() + 1);
  return rep;
}

double check_symplectic(const RKNTableau& t) {
  const std::size_t s = static_cast<std::size_t>(t.stages());
  double worst = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    worst = std::max(worst, std::abs(t.b_bar[i] - t.b_prime[i] * (1.0 - t.c[i])));
    for (std::size_t j = 0; j < s; ++j) {
      const double lhs = t.b_prime[i] * (t.b_bar[j] - t.a_bar(i, j));
      const double rhs = t.b_prime[j] * (t.b_bar[i] - t.a_bar(j, i));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

RKNTableau adjoint_tableau(const RKNTableau& t) {
  const std::size_t s = static_cast<std::size_t>(t.stages());
  auto rev = [s](std::size_t i) { return s - 1 - i; };
  RKNTableau a;
  a.c.resize(s);
  a.b_bar.resize(s);
  a.b_prime.resize(s);
  a.a_bar = Matrix(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t si = rev(i);
    a.c[i] = 1.0 - t.c[si];
    a.b_bar[i] = t.b_prime[si] - t.b_bar[si];
    a.b_prime[i] = t.b_prime[si];
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t sj = rev(j);
      a.a_bar(i, j) = t.b_prime[sj] * (1.0 - t.c[si]) - t.b_bar[sj] + t.a_bar(si, sj);
    }
  }
  a.provenance = t.provenance;
  return a;
}

std::optional<double> check_symmetric(const RKNTableau& t) {
  if (t.provenance && !has_symmetric_weight(t.provenance->family)) return std::nullopt;
  const RKNTableau a = adjoint_tableau(t);
  const std::size_t s = static_cast<std::size_t>(t.stages());
  double worst = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    worst = std::max({worst, std::abs(a.c[i] - t.c[i]), std::abs(a.b_bar[i] - t.b_bar[i]),
                      std::abs(a.b_prime[i] - t.b_prime[i])});
    for (std::size_t j = 0; j < s; ++j)
      worst = std::max(worst, std::abs(a.a_bar(i, j) - t.a_bar(i, j)));
  }
  return worst;
}

OrderEstimate empirical_order(const RKNTableau& tab, const SecondOrderProblem& pr, double h0,
                              int levels, double T, const SolverConfig& cfg) {
  if (!pr.exact) throw std::invalid_argument("problem '" + pr.name + "' has no exact solution");
  if (levels < 3) throw std::invalid_argument("order study needs at least 3 levels");
  if (!(h0 > 0.0) || !(T > 0.0)) throw std::invalid_argument("h0 and T must be positive");

  OrderEstimate est;
  for (int k = 0; k < levels; ++k) {
    const double h = h0 / std::ldexp(1.0, k);
    const long long n = std::max(1LL, std::llround(T / h));
    SolverConfig c = cfg;
    c.record_every = static_cast<int>(std::min<long long>(n, 1 << 30));
    const Trajectory tr = integrate(tab, pr, 0.0, pr.initial.q, pr.initial.p, h, n, c);
    const State ex = pr.exact(static_cast<double>(n) * h);
    double err = 0.0;
    for (int i = 0; i < pr.dim; ++i)
      err = std::max({err, std::abs(tr.q.back()[i] - ex.q[i]), std::abs(tr.p.back()[i] - ex.p[i])});
    est.h.push_back(h);
    est.errors.push_back(err);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < est.errors.size(); ++k) {
    const double slope = std::log2(est.errors[k] / est.errors[k + 1]);
    est.slopes.push_back(slope);
    sum += slope;
  }
  est.mean_slope = est.slopes.empty() ? 0.0 : sum / static_cast<double>(est.slopes.size());
  return est;
}

namespace {

void render_family(std::ostream& os, const std::string& label, const std::vector<double>& r) {
  for (std::size_t k = 0; k < r.size(); ++k) {
    const std::string name = label + '(' + std::to_string(k + 1) + ')';
    os << "  " << std::left << std::setw(16) << name << std::right << std::scientific
       << std::setprecision(3) << r[k] << (r[k] < kConditionTolerance ? "  holds" : "  fails")
       << '\n';
  }
}

}  // namespace

void render_report(std::ostream& os, const ConditionReport& rep) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << "conditions (residual, tolerance " << format_double(kConditionTolerance) << ")\n";
  render_family(os, "B", rep.b);
  render_family(os, "CN", rep.cn);
  render_family(os, "DN", rep.dn);
  os << std::scientific << std::setprecision(3);
  if (rep.discrete) os << "  " << std::left << std::setw(16) << "bBar identity" << std::right
                       << rep.bbar_residual << '\n';
  os << "holds: B up to " << rep.b_holds() << ", CN up to " << rep.cn_holds() << ", DN up to "
     << rep.dn_holds() << '\n';
  if (rep.discrete)
    os << "predicted order " << rep.predicted_order << '\n';
  else
    os << "order >= " << rep.predicted_order << " from the requested conditions\n";
  if (rep.symplectic_residual) os << "symplectic residual " << *rep.symplectic_residual << '\n';
  if (rep.discrete) {
    if (rep.symmetry_residual)
      os << "symmetry residual " << *rep.symmetry_residual << '\n';
    else
      os << "symmetry not applicable\n";
  }
  os.flags(flags);
  os.precision(prec);
}

void write_report_csv(std::ostream& os, const ConditionReport& rep) {
  os << "condition,kappa,residual\n";
  auto rows = [&](const char* name, const std::vector<double>& r) {
    for (std::size_t k = 0; k < r.size(); ++k)
      os << name << ',' << k + 1 << ',' << format_double(r[k]) << '\n';
  };
  rows("B", rep.b);
  rows("CN", rep.cn);
  rows("DN", rep.dn);
  if (rep.discrete) os << "bBar,," << format_double(rep.bbar_residual) << '\n';
  if (rep.symplectic_residual) os << "symplectic,," << format_double(*rep.symplectic_residual) << '\n';
  if (rep.discrete)
    os << "symmetry,," << (rep.symmetry_residual ? format_double(*rep.symmetry_residual) : "NA")
       << '\n';
}

}  // namespace csrkn
