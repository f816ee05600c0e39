#include "csrkn/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace csrkn {

Real pi_real() { return boost::math::constants::pi<Real>(); }

Polynomial::Polynomial(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (double c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Real& c) { return Polynomial(std::vector<Real>{c}); }

Polynomial Polynomial::monomial(int k, const Real& c) {
  if (k < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Real> v(static_cast<std::size_t>(k) + 1, Real(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Real Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Real(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Real Polynomial::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const { return to_double((*this)(Real(x))); }

Polynomial Polynomial::primitive() const {
  std::vector<Real> v(coeffs_.size() + 1, Real(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k] / Real(k + 1);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Real> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Real(k);
  return Polynomial(std::move(v));
}

Real Polynomial::integral(const Real& a, const Real& b) const {
  const Polynomial p = primitive();
  return p(b) - p(a);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Real(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Real(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Real& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Real> v(a.coeffs_.size() + b.coeffs_.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Real Polynomial::max_abs_coeff() const {
  Real m = 0;
  for (const auto& c : coeffs_) m = std::max(m, Real(abs(c)));
  return m;
}

BivariatePolynomial::BivariatePolynomial(int deg_tau, int deg_sigma)
    : rows_(deg_tau + 1), cols_(deg_sigma + 1),
      c_(static_cast<std::size_t>(rows_ * cols_), Real(0)) {}

void BivariatePolynomial::add_outer(const Polynomial& f, const Polynomial& g) {
  const int nr = std::max(rows_, f.degree() + 1);
  const int nc = std::max(cols_, g.degree() + 1);
  if (nr != rows_ || nc != cols_) {
    std::vector<Real> grown(static_cast<std::size_t>(nr * nc), Real(0));
    for (int a = 0; a < rows_; ++a)
      for (int b = 0; b < cols_; ++b) grown[a * nc + b] = c_[a * cols_ + b];
    c_ = std::move(grown);
    rows_ = nr;
    cols_ = nc;
  }
  for (int a = 0; a <= f.degree(); ++a)
    for (int b = 0; b <= g.degree(); ++b) c_[a * cols_ + b] += f.coeff(a) * g.coeff(b);
}

int BivariatePolynomial::degree_tau() const {
  for (int a = rows_ - 1; a >= 0; --a)
    for (int b = 0; b < cols_; ++b)
      if (c_[a * cols_ + b] != 0) return a;
  return -1;
}

int BivariatePolynomial::degree_sigma() const {
  for (int b = cols_ - 1; b >= 0; --b)
    for (int a = 0; a < rows_; ++a)
      if (c_[a * cols_ + b] != 0) return b;
  return -1;
}

Real BivariatePolynomial::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a >= rows_ || b >= cols_) return Real(0);
  return c_[a * cols_ + b];
}

Real BivariatePolynomial::operator()(const Real& tau, const Real& sigma) const {
  Real acc = 0;
  for (int a = rows_ - 1; a >= 0; --a) acc = acc * tau + tau_slice(a)(sigma);
  return acc;
}

Polynomial BivariatePolynomial::tau_slice(int a) const {
  if (a < 0 || a >= rows_) return {};
  std::vector<Real> v(c_.begin() + a * cols_, c_.begin() + (a + 1) * cols_);
  return Polynomial(std::move(v));
}

}  // namespace csrkn
