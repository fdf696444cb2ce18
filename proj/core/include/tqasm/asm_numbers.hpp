#ifndef TQASM_ASM_NUMBERS_HPP
#define TQASM_ASM_NUMBERS_HPP

#include <string>
#include <vector>

#include "tqasm/rational.hpp"

namespace tqasm {

/// Row M of the refined alternating-sign-matrix enumeration:
/// counts[r-1] = A(M, r), the number of order-M ASMs whose first column
/// has its 1 in row r.
struct AsmRow {
  int order = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
};

/// A(M, r) for 1 <= r <= M. Rows are built left to right with
///   (2M - r - 1) r A(M, r+1) = (M - r)(M + r - 1) A(M, r),
/// seeded by A(M, 1) = A(M - 1) and A(1, 1) = 1. Every step must divide
/// exactly; a fractional intermediate raises InvariantViolation.
BigInt asm_refined(int M, int r);

/// A(M) = sum_r A(M, r).
BigInt asm_total(int M);

/// Memoized row M (thread-safe).
const AsmRow& asm_row(int M);

/// Triangle of rows 1..M, each row centered.
std::string asm_table_text(int max_order);

}  // namespace tqasm

#endif  // TQASM_ASM_NUMBERS_HPP
