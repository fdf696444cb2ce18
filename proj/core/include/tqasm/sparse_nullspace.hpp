#ifndef TQASM_SPARSE_NULLSPACE_HPP
#define TQASM_SPARSE_NULLSPACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tqasm/rational.hpp"

namespace tqasm {

/// Row-major sparse matrix with exact rational entries. Each row is kept
/// sorted by column with no explicit zeros.
class SparseRationalMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseRationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds value to entry (row, col), dropping it if the sum cancels.
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  /// y = A x.
  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

struct EliminationStats {
  std::size_t pivots = 0;
  std::size_t peak_nonzeros = 0;
  std::size_t max_entry_bits = 0;
};

struct NullspaceResult {
  std::size_t rank = 0;
  /// One primitive integer vector per free column, first nonzero positive.
  std::vector<std::vector<BigInt>> basis;
  EliminationStats stats;

  std::size_t dimension() const { return basis.size(); }
};

/// Exact right nullspace of A.
///
/// Rows are scaled to primitive integer rows and eliminated without
/// fractions: row_i <- (p/g) row_i - (a/g) row_p followed by removal of the
/// row content, where p is the pivot, a the entry being cleared and
/// g = gcd(p, a). Pivots are chosen by Markowitz cost among the shortest
/// active rows, ties broken by entry size then index, so the result is
/// deterministic.
NullspaceResult exact_nullspace(const SparseRationalMatrix& a);

}  // namespace tqasm

#endif  // TQASM_SPARSE_NULLSPACE_HPP
