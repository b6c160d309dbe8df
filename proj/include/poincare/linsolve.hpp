#pragma once

// Exact null-space computation over the real subfield of Number.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poincare/matrix.hpp"
#include "poincare/number.hpp"

namespace poincare {

using NumberMatrix = DenseMatrix<Number>;

/// Basis of {x : A x = 0} by Gauss-Jordan elimination. Entries of A must lie
/// in a field closed under Number arithmetic (real entries give real basis
/// vectors).
inline std::vector<std::vector<Number>> null_space(NumberMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t k = r; k < rows; ++k) {
      if (!a(k, c).is_zero()) {
        pivot = k;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    Number inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a(k, c).is_zero()) continue;
      Number f = a(k, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(k, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Number>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Number> v(cols);
    v[free] = Number(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rows with complex coefficients acting on real unknowns, split into their
/// real and imaginary equations.
inline NumberMatrix realify_rows(const NumberMatrix& complex_rows) {
  NumberMatrix out(2 * complex_rows.rows(), complex_rows.cols());
  for (std::size_t r = 0; r < complex_rows.rows(); ++r)
    for (std::size_t c = 0; c < complex_rows.cols(); ++c) {
      out(2 * r, c) = complex_rows(r, c).real_part();
      out(2 * r + 1, c) = complex_rows(r, c).imag_part();
    }
  return out;
}

inline std::size_t rank(const NumberMatrix& a) { return a.cols() - null_space(a).size(); }

/// Inverse of a square matrix; throws std::domain_error when singular.
inline NumberMatrix inverse(const NumberMatrix& a) {
  const std::size_t n = a.rows();
  NumberMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Number(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(pivot, j), aug(c, j));
    Number inv = aug(c, c).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = aug(c, j) * inv;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || aug(k, c).is_zero()) continue;
      Number f = aug(k, c);
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!aug(c, j).is_zero()) aug(k, j) -= f * aug(c, j);
    }
  }
  NumberMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

}  // namespace poincare
