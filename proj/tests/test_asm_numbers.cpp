#include <algorithm>

#include "data/reference_values.hpp"
#include "doctest.h"
#include "oracles/asm_bruteforce.hpp"
#include "tqasm/asm_numbers.hpp"

using namespace tqasm;

TEST_CASE("refined counts reproduce the reference rows") {
  for (std::size_t m = 1; m <= reference::kAsmRows.size(); ++m) {
    const auto& row = reference::kAsmRows[m - 1];
    for (std::size_t r = 1; r <= m; ++r) {
      CHECK(asm_refined(static_cast<int>(m), static_cast<int>(r)) == BigInt(row[r - 1]));
    }
  }
}

TEST_CASE("refined counts examples") {
  CHECK(asm_refined(6, 2) == 1287);
  CHECK(asm_refined(4, 2) == 14);
  CHECK(asm_refined(7, 1) == 7436);
  CHECK(asm_total(5) == 429);
  CHECK(asm_total(1) == 1);
  CHECK(asm_total(7) == 218348);
}

TEST_CASE("brute-force enumeration agrees for small orders") {
  for (int m = 1; m <= 5; ++m) {
    const auto counts = oracle::asm_refined_bruteforce(m);
    for (int r = 1; r <= m; ++r) CHECK(asm_refined(m, r) == BigInt(counts[static_cast<std::size_t>(r - 1)]));
  }
}

TEST_CASE("palindrome and first-entry properties") {
  for (int m = 1; m <= 30; ++m) {
    const AsmRow& row = asm_row(m);
    REQUIRE(row.counts.size() == static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r) CHECK(asm_refined(m, r) == asm_refined(m, m + 1 - r));
    if (m >= 2) CHECK(asm_refined(m, 1) == asm_total(m - 1));
    CHECK(row.total() == asm_total(m));
  }
}

TEST_CASE("out-of-range arguments are rejected") {
  CHECK_THROWS(asm_refined(0, 1));
  CHECK_THROWS(asm_refined(4, 5));
  CHECK_THROWS(asm_refined(4, 0));
}

TEST_CASE("table text layout") {
  const std::string text = asm_table_text(3);
  CHECK(text.find("2") != std::string::npos);
  CHECK(text.find("3") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
