#include <random>

#include "doctest.h"
#include "oracles/dense_linalg.hpp"
#include "support/random_values.hpp"
#include "tqasm/sparse_nullspace.hpp"

using namespace tqasm;
using tqasm::testing::kSeed;

namespace {

std::vector<Rational> to_rational(const std::vector<BigInt>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// Rank of a set of vectors by dense elimination.
std::size_t dense_rank(const std::vector<std::vector<Rational>>& vs, std::size_t cols) {
  if (vs.empty()) return 0;
  oracle::DenseMatrix m(cols, std::vector<Rational>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < cols; ++i) m[i][j] = vs[j][i];
  return vs.size() - oracle::dense_nullspace(m).size();
}

}  // namespace

TEST_CASE("small hand example") {
  SparseRationalMatrix a(2, 3);
  a.add(0, 0, Rational(1));
  a.add(0, 1, Rational(2));
  a.add(1, 1, Rational(1));
  a.add(1, 2, Rational(-1));
  const auto ns = exact_nullspace(a);
  CHECK(ns.rank == 2);
  REQUIRE(ns.dimension() == 1);
  const auto v = to_rational(ns.basis[0]);
  CHECK(is_zero_vector(a.multiply(v)));
  // primitive integer vector, proportional to (-2, 1, 1)
  CHECK(abs(v[0]) == Rational(2));
  CHECK(abs(v[1]) == Rational(1));
}

TEST_CASE("zero and full-rank matrices") {
  SparseRationalMatrix z(3, 4);
  CHECK(exact_nullspace(z).dimension() == 4);
  SparseRationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.add(i, i, Rational(1, 3));
  CHECK(exact_nullspace(id).dimension() == 0);
}

TEST_CASE("accessors") {
  SparseRationalMatrix a(2, 2);
  a.add(0, 1, Rational(3));
  a.add(0, 1, Rational(-3));
  a.add(1, 0, Rational(5, 2));
  CHECK(a.at(0, 1) == Rational(0));
  CHECK(a.at(1, 0) == Rational(5, 2));
  CHECK(a.nonzeros() == 1);
}

TEST_CASE("random sparse matrices match the dense oracle") {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  std::bernoulli_distribution fill(0.35);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    SparseRationalMatrix a(rows, cols);
    oracle::DenseMatrix d(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (!fill(rng)) continue;
        const Rational x = testing::random_nonzero_rational(rng);
        a.add(i, j, x);
        d[i][j] = x;
      }
    // occasionally force dependent rows
    if (rows >= 2 && trial % 3 == 0) {
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational x = d[0][j] * Rational(2) - d[1][j];
        d[rows - 1][j] = x;
      }
      SparseRationalMatrix b(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (!d[i][j].is_zero()) b.add(i, j, d[i][j]);
      a = b;
    }
    const auto ns = exact_nullspace(a);
    const auto dense = oracle::dense_nullspace(d);
    CHECK(ns.dimension() == dense.size());
    CHECK(ns.rank + ns.dimension() == cols);
    std::vector<std::vector<Rational>> basis;
    for (const auto& v : ns.basis) {
      basis.push_back(to_rational(v));
      CHECK(is_zero_vector(a.multiply(basis.back())));
      BigInt g = 0;
      for (const auto& x : v) g = gcd(g, x);
      CHECK(g == 1);
    }
    CHECK(dense_rank(basis, cols) == basis.size());
  }
}
