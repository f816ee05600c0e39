#pragma once

#include <vector>

#include "csrkn/real.hpp"

namespace csrkn {

/// Dense univariate polynomial, coefficient k multiplies x^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Real> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(const Real& c);
  static Polynomial monomial(int k, const Real& c = Real(1));

  /// Index of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  const std::vector<Real>& coeffs() const { return coeffs_; }
  Real coeff(int k) const;

  Real operator()(const Real& x) const;
  double eval(double x) const;

  /// Primitive with zero constant term: x -> int_0^x p.
  Polynomial primitive() const;
  Polynomial derivative() const;
  Real integral(const Real& a, const Real& b) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Real& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Real& s) { return a *= s; }
  friend Polynomial operator*(const Real& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Largest absolute coefficient.
  Real max_abs_coeff() const;

 private:
  void trim();
  std::vector<Real> coeffs_;
};

/// Dense bivariate polynomial in (tau, sigma); coeff(a, b) multiplies tau^a sigma^b.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  BivariatePolynomial(int deg_tau, int deg_sigma);

  /// Adds f(tau) * g(sigma).
  void add_outer(const Polynomial& f, const Polynomial& g);

  int degree_tau() const;
  int degree_sigma() const;
  Real coeff(int a, int b) const;
  Real operator()(const Real& tau, const Real& sigma) const;

  /// Coefficient of tau^a as a polynomial in sigma.
  Polynomial tau_slice(int a) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Real> c_;
};

}  // namespace csrkn
