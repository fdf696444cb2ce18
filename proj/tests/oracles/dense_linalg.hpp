// Test-only oracle: dense Gauss-Jordan over the rationals.
#ifndef TQASM_TESTS_DENSE_LINALG_HPP
#define TQASM_TESTS_DENSE_LINALG_HPP

#include <vector>

#include "tqasm/rational.hpp"

namespace tqasm::oracle {

using DenseMatrix = std::vector<std::vector<Rational>>;

// Basis of the right nullspace, one vector per free column (free entry 1).
inline std::vector<std::vector<Rational>> dense_nullspace(DenseMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = Rational(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.size(), std::vector<Rational>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace tqasm::oracle

#endif
