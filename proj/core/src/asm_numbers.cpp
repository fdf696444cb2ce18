#include "tqasm/asm_numbers.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tqasm/errors.hpp"

namespace tqasm {

namespace {

std::mutex g_rows_mutex;
// deque keeps references stable while new rows are appended.
std::deque<AsmRow> g_rows;

AsmRow build_row(int M, const BigInt& seed) {
  AsmRow row;
  row.order = M;
  row.counts.reserve(static_cast<std::size_t>(M));
  Rational current(seed);
  row.counts.push_back(seed);
  for (int r = 1; r < M; ++r) {
    const Rational ratio(BigInt(static_cast<long>(M - r) * (M + r - 1)),
                         BigInt(static_cast<long>(2 * M - r - 1) * r));
    current *= ratio;
    if (!current.is_integer()) {
      throw InvariantViolation("A(" + std::to_string(M) + "," + std::to_string(r + 1) +
                               ") is not an integer: " + current.to_string());
    }
    row.counts.push_back(current.num());
  }
  return row;
}

}  // namespace

BigInt AsmRow::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

const AsmRow& asm_row(int M) {
  if (M < 1) throw std::out_of_range("ASM order must be >= 1, got " + std::to_string(M));
  std::lock_guard lock(g_rows_mutex);
  while (static_cast<int>(g_rows.size()) < M) {
    const int next = static_cast<int>(g_rows.size()) + 1;
    const BigInt seed = next == 1 ? BigInt(1) : g_rows.back().total();
    g_rows.push_back(build_row(next, seed));
  }
  return g_rows[static_cast<std::size_t>(M - 1)];
}

BigInt asm_refined(int M, int r) {
  if (M < 1 || r < 1 || r > M) {
    throw std::out_of_range("asm_refined: need 1 <= r <= M, got M=" + std::to_string(M) +
                            " r=" + std::to_string(r));
  }
  return asm_row(M).counts[static_cast<std::size_t>(r - 1)];
}

BigInt asm_total(int M) { return asm_row(M).total(); }

std::string asm_table_text(int max_order) {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int m = 1; m <= max_order; ++m) {
    std::vector<std::string> row;
    for (const auto& c : asm_row(m).counts) {
      row.push_back(c.get_str());
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  const std::size_t cell = width + 2;
  const std::size_t half = (cell + 1) / 2;
  std::ostringstream out;
  for (int m = 1; m <= max_order; ++m) {
    std::string line(static_cast<std::size_t>(max_order - m) * half, ' ');
    for (const auto& s : cells[static_cast<std::size_t>(m - 1)]) {
      const std::size_t pad = cell - s.size();
      line += std::string(pad / 2, ' ') + s + std::string(pad - pad / 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace tqasm
