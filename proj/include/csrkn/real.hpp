#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace csrkn {

/// Extended-precision scalar used for polynomial algebra and construction.
/// Monomial coefficients of degree-8 orthonormal polynomials reach 1e5, so
/// moment-based inner products lose ~1e-6 in double.
using Real = boost::multiprecision::cpp_bin_float_quad;

using Vector = std::vector<double>;

inline double to_double(const Real& x) { return x.convert_to<double>(); }

Real pi_real();

}  // namespace csrkn
