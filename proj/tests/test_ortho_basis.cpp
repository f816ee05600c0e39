#include <doctest.h>

#include <cmath>

#include "csrkn/ortho_basis.hpp"

using namespace csrkn;

namespace {

const double kPi = std::acos(-1.0);
const FamilyKind kAll[] = {FamilyKind::ShiftedLegendre, FamilyKind::ShiftedChebyshev1,
                           FamilyKind::ShiftedHermite, FamilyKind::StandardHermite};

}  // namespace

TEST_CASE("closed-form low-degree polynomials") {
  const auto sl = make_basis(FamilyKind::ShiftedLegendre, 3);
  for (double x : {0.0, 0.3, 0.75, 1.0})
    CHECK(sl.eval(1, x) == doctest::Approx(std::sqrt(3.0) * (2 * x - 1)).epsilon(1e-15));

  const auto sc = make_basis(FamilyKind::ShiftedChebyshev1, 3);
  CHECK(sc.eval(0, 0.4) == doctest::Approx(std::sqrt(2.0) / std::sqrt(kPi)).epsilon(1e-15));
  // T_2 = (2/sqrt(pi)) (8x^2 - 8x + 1)
  CHECK(sc.eval(2, 0.2) ==
        doctest::Approx(2.0 / std::sqrt(kPi) * (8 * 0.04 - 1.6 + 1)).epsilon(1e-14));

  const auto sh = make_basis(FamilyKind::StandardHermite, 3);
  CHECK(sh.eval(0, 1.7) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
}

TEST_CASE("zeroth moments") {
  CHECK(std::abs(to_double(make_basis(FamilyKind::ShiftedLegendre, 2).moment(0)) - 1.0) < 1e-13);
  CHECK(std::abs(to_double(make_basis(FamilyKind::ShiftedChebyshev1, 2).moment(0)) - kPi / 2) < 1e-13);
  CHECK(std::abs(to_double(make_basis(FamilyKind::ShiftedHermite, 2).moment(0)) - std::sqrt(kPi) / 2) < 1e-13);
  CHECK(std::abs(to_double(make_basis(FamilyKind::StandardHermite, 2).moment(0)) - std::sqrt(kPi)) < 1e-13);
}

TEST_CASE("orthonormality up to degree 8 for every family") {
  for (auto kind : kAll) {
    CAPTURE(family_name(kind));
    const auto b = make_basis(kind, 8);
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        const double ip = to_double(inner_product(b, b.poly(i), b.poly(j)));
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("degree exactly n with positive leading coefficient") {
  for (auto kind : kAll) {
    const auto b = make_basis(kind, kMaxBasisDegree);
    for (int n = 0; n <= kMaxBasisDegree; ++n) {
      CHECK(b.poly(n).degree() == n);
      CHECK(b.poly(n).coeff(n) > 0);
    }
  }
}

TEST_CASE("reflection P_n(1-x) = (-1)^n P_n(x) iff the weight is symmetric") {
  for (auto kind : kAll) {
    CAPTURE(family_name(kind));
    const auto b = make_basis(kind, 8);
    double worst_odd = 0.0, worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k < 100; ++k) {
        const double x = k / 99.0;
        const double d = std::abs(b.eval(n, 1 - x) - (n % 2 ? -1.0 : 1.0) * b.eval(n, x));
        worst = std::max(worst, d);
        if (n == 1) worst_odd = std::max(worst_odd, d);
      }
    }
    if (has_symmetric_weight(kind)) {
      CHECK(worst < 1e-10);
    } else {
      CHECK(worst_odd > 1e-3);
    }
  }
  CHECK(has_symmetric_weight(FamilyKind::ShiftedLegendre));
  CHECK(has_symmetric_weight(FamilyKind::ShiftedChebyshev1));
  CHECK(has_symmetric_weight(FamilyKind::ShiftedHermite));
  CHECK_FALSE(has_symmetric_weight(FamilyKind::StandardHermite));
}

TEST_CASE("inner products against x") {
  const Polynomial x = Polynomial::monomial(1);
  const auto sl = make_basis(FamilyKind::ShiftedLegendre, 2);
  CHECK(to_double(inner_product(sl, sl.poly(1), sl.poly(1))) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(to_double(inner_product(sl, x, sl.poly(1))) == doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-15));
  const auto sc = make_basis(FamilyKind::ShiftedChebyshev1, 2);
  CHECK(to_double(inner_product(sc, x, sc.poly(1))) == doctest::Approx(std::sqrt(kPi) / 4).epsilon(1e-15));
}

TEST_CASE("inner product rejects degree overflow") {
  const auto b = make_basis(FamilyKind::ShiftedLegendre, 2);
  CHECK_THROWS_AS(inner_product(b, Polynomial::monomial(4), Polynomial::monomial(3)), std::domain_error);
  CHECK_NOTHROW(inner_product(b, Polynomial::monomial(3), Polynomial::monomial(3)));
}

TEST_CASE("unit interval integrals") {
  const auto sl = make_basis(FamilyKind::ShiftedLegendre, 4);
  CHECK(std::abs(to_double(unit_interval_integral(sl, 1))) < 1e-30);
  CHECK(to_double(unit_interval_integral(sl, 0)) == doctest::Approx(1.0).epsilon(1e-15));
  const auto sc = make_basis(FamilyKind::ShiftedChebyshev1, 4);
  CHECK(to_double(unit_interval_integral(sc, 2)) ==
        doctest::Approx(-2.0 / (3.0 * std::sqrt(kPi))).epsilon(1e-15));
  const auto sh = make_basis(FamilyKind::ShiftedHermite, 9);
  for (int j = 1; j <= 9; j += 2) CHECK(std::abs(to_double(unit_interval_integral(sh, j))) < 1e-25);
}

TEST_CASE("double primitives") {
  const auto sc = make_basis(FamilyKind::ShiftedChebyshev1, 4);
  const Polynomial d0 = double_primitive(sc, 0);
  const double c = std::sqrt(2.0 / kPi);
  CHECK(d0.degree() == 2);
  CHECK(to_double(d0.coeff(2)) == doctest::Approx(c / 2).epsilon(1e-15));
  CHECK(to_double(d0.coeff(1)) == 0.0);
  CHECK(to_double(d0.coeff(0)) == 0.0);

  const auto sl = make_basis(FamilyKind::ShiftedLegendre, 4);
  const Polynomial d1 = double_primitive(sl, 1);
  for (double t : {0.1, 0.5, 0.9, 1.4})
    CHECK(d1.eval(t) == doctest::Approx(std::sqrt(3.0) * (t * t * t / 3 - t * t / 2)).epsilon(1e-14));
  for (int n = 0; n <= 4; ++n) CHECK(double_primitive(sl, n).degree() == n + 2);
}

TEST_CASE("expansion recovers basis coefficients") {
  const auto b = make_basis(FamilyKind::ShiftedHermite, 5);
  const Polynomial p = Real(2) * b.poly(3) - Real(0.5) * b.poly(1) + b.poly(0);
  const auto c = expand_in_basis(b, p);
  REQUIRE(c.size() == 4);
  CHECK(to_double(c[0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(to_double(c[1]) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(to_double(c[2])) < 1e-14);
  CHECK(to_double(c[3]) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("degree cap and index errors") {
  CHECK_THROWS_AS(make_basis(FamilyKind::ShiftedLegendre, kMaxBasisDegree + 1), std::invalid_argument);
  CHECK_THROWS_AS(make_basis(FamilyKind::ShiftedLegendre, -1), std::invalid_argument);
  const auto b = make_basis(FamilyKind::ShiftedLegendre, 3);
  CHECK_THROWS_AS(b.poly(4), std::out_of_range);
  CHECK_THROWS_AS(b.moment(b.max_moment() + 1), std::domain_error);
}

TEST_CASE("family names round-trip") {
  for (auto kind : kAll) CHECK(parse_family(family_name(kind)) == kind);
  CHECK(parse_family("legendre") == FamilyKind::ShiftedLegendre);
  CHECK_FALSE(parse_family("laguerre").has_value());
}
