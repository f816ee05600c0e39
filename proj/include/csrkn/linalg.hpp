#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csrkn {

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct TridiagonalEigen {
  std::vector<T> values;     // ascending
  DenseMatrix<T> vectors;    // column k belongs to values[k], unit norm
};

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off` (off[i] couples rows i and i+1) by implicit-shift QL.
template <class T>
TridiagonalEigen<T> symmetric_tridiagonal_eigen(std::vector<T> diag, std::vector<T> off,
                                                int max_sweeps_per_value = 60) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 < n) throw std::invalid_argument("off-diagonal too short");
  off.resize(n, T(0));
  off[n - 1] = T(0);

  DenseMatrix<T> v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = T(1);

  const T eps = std::numeric_limits<T>::epsilon();
  auto hyp = [](const T& a, const T& b) { return T(sqrt(a * a + b * b)); };

  T f = 0;
  T tst1 = 0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, T(abs(diag[l]) + abs(off[l])));
    std::size_t m = l;
    while (m < n - 1 && abs(off[m]) > eps * tst1) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps_per_value)
          throw EigenError("tridiagonal QL did not converge for eigenvalue " + std::to_string(l));
        T g = diag[l];
        T p = (diag[l + 1] - g) / (T(2) * off[l]);
        T r = hyp(p, T(1));
        if (p < 0) r = -r;
        diag[l] = off[l] / (p + r);
        diag[l + 1] = off[l] * (p + r);
        const T dl1 = diag[l + 1];
        T h = g - diag[l];
        for (std::size_t i = l + 2; i < n; ++i) diag[i] -= h;
        f += h;

        p = diag[m];
        T c = 1, c2 = 1, c3 = 1;
        const T el1 = off[l + 1];
        T s = 0, s2 = 0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * off[ii];
          h = c * p;
          r = hyp(p, off[ii]);
          off[ii + 1] = s * r;
          s = off[ii] / r;
          c = p / r;
          p = c * diag[ii] - s * g;
          diag[ii + 1] = h + s * (c * g + s * diag[ii]);
          for (std::size_t k = 0; k < n; ++k) {
            h = v(k, ii + 1);
            v(k, ii + 1) = s * v(k, ii) + c * h;
            v(k, ii) = c * v(k, ii) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * off[l] / dl1;
        off[l] = s * p;
        diag[l] = c * p;
      } while (abs(off[l]) > eps * tst1);
    }
    diag[l] += f;
    off[l] = 0;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  TridiagonalEigen<T> out{std::vector<T>(n), DenseMatrix<T>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Outcome of reducing A x = b when A may be rank deficient.
template <class T>
struct ReducedSolve {
  std::vector<T> x;
  std::vector<std::size_t> free_columns;   // unknowns not fixed by any equation
  std::optional<std::size_t> inconsistent_row;  // original index of a contradicted equation
};

/// Gaussian elimination with partial pivoting over columns in order. Columns
/// that receive no pivot are free and take `free_values[col]`. Pivots are
/// taken left to right, so later columns are the ones left free.
template <class T>
ReducedSolve<T> reduce_and_solve(DenseMatrix<T> a, std::vector<T> b,
                                 const std::vector<T>& free_values, const T& rel_tol) {
  using std::abs;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || free_values.size() != n)
    throw std::invalid_argument("reduce_and_solve: dimension mismatch");

  T scale = 0;
  for (const auto& e : a.data()) scale = std::max(scale, T(abs(e)));
  for (const auto& e : b) scale = std::max(scale, T(abs(e)));
  const T tol = rel_tol * std::max(scale, T(1));

  std::vector<std::size_t> origin(m);
  for (std::size_t i = 0; i < m; ++i) origin[i] = i;

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = row;
    for (std::size_t i = row + 1; i < m; ++i)
      if (abs(a(i, col)) > abs(a(best, col))) best = i;
    if (abs(a(best, col)) <= tol) continue;
    if (best != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(row, j), a(best, j));
      std::swap(b[row], b[best]);
      std::swap(origin[row], origin[best]);
    }
    for (std::size_t i = row + 1; i < m; ++i) {
      const T factor = a(i, col) / a(row, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(row, j);
      b[i] -= factor * b[row];
    }
    is_pivot[col] = true;
    pivot_col_of_row.push_back(col);
    ++row;
  }

  ReducedSolve<T> out;
  for (std::size_t i = row; i < m; ++i) {
    if (abs(b[i]) > tol) {
      out.inconsistent_row = origin[i];
      return out;
    }
  }

  out.x.assign(n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) {
      out.free_columns.push_back(j);
      out.x[j] = free_values[j];
    }
  }
  for (std::size_t k = row; k-- > 0;) {
    const std::size_t col = pivot_col_of_row[k];
    T acc = b[k];
    for (std::size_t j = col + 1; j < n; ++j) acc -= a(k, j) * out.x[j];
    out.x[col] = acc / a(k, col);
  }
  return out;
}

}  // namespace csrkn
