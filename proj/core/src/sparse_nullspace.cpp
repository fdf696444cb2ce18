#include "tqasm/sparse_nullspace.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tqasm {

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

void SparseRationalMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_.size() || col >= cols_) throw std::out_of_range("SparseRationalMatrix::add");
  if (value.is_zero()) return;
  auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    it->second += value;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, Entry{col, value});
  }
}

Rational SparseRationalMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Rational(0);
}

std::size_t SparseRationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<Rational> SparseRationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseRationalMatrix::multiply: size mismatch");
  std::vector<Rational> y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational s;
    for (const auto& [j, v] : rows_[i]) s += v * x[j];
    y[i] = std::move(s);
  }
  return y;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, BigInt>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const std::vector<SparseRationalMatrix::Entry>& row) {
  BigInt l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, BigInt(v.num() * (l / v.den())));
  make_primitive(out);
  return out;
}

const BigInt* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target <- sp * target - sa * pivot_row, then made primitive.
IntRow combine(const IntRow& target, const IntRow& pivot_row, const BigInt& sp, const BigInt& sa) {
  IntRow out;
  out.reserve(target.size() + pivot_row.size());
  auto it = target.begin();
  auto jt = pivot_row.begin();
  BigInt tmp;
  while (it != target.end() || jt != pivot_row.end()) {
    if (jt == pivot_row.end() || (it != target.end() && it->first < jt->first)) {
      out.emplace_back(it->first, BigInt(sp * it->second));
      ++it;
    } else if (it == target.end() || jt->first < it->first) {
      out.emplace_back(jt->first, BigInt(-(sa * jt->second)));
      ++jt;
    } else {
      tmp = sp * it->second;
      tmp -= sa * jt->second;
      if (tmp != 0) out.emplace_back(it->first, tmp);
      ++it;
      ++jt;
    }
  }
  make_primitive(out);
  return out;
}

constexpr std::size_t kCandidateRows = 6;

}  // namespace

NullspaceResult exact_nullspace(const SparseRationalMatrix& a) {
  const std::size_t nrows = a.rows();
  const std::size_t ncols = a.cols();

  std::vector<IntRow> rows;
  rows.reserve(nrows);
  std::vector<std::size_t> col_count(ncols, 0);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < nrows; ++i) {
    rows.push_back(to_integer_row(a.row(i)));
    if (!rows.back().empty()) {
      active.push_back(i);
      for (const auto& e : rows.back()) ++col_count[e.first];
    }
  }

  NullspaceResult result;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col) in elimination order
  std::vector<bool> is_pivot_col(ncols, false);

  while (!active.empty()) {
    // Markowitz search restricted to the shortest active rows.
    std::vector<std::size_t> cand = active;
    const std::size_t keep = std::min(kCandidateRows, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(keep), cand.end(),
                      [&](std::size_t x, std::size_t y) {
                        return std::make_pair(rows[x].size(), x) < std::make_pair(rows[y].size(), y);
                      });
    cand.resize(keep);

    std::size_t best_row = 0, best_col = 0;
    auto best_key = std::make_tuple(std::numeric_limits<std::size_t>::max(),
                                    std::numeric_limits<std::size_t>::max(), std::size_t{0}, std::size_t{0});
    for (std::size_t r : cand) {
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = (rows[r].size() - 1) * (col_count[c] - 1);
        auto key = std::make_tuple(cost, mpz_sizeinbase(v.get_mpz_t(), 2), r, c);
        if (key < best_key) {
          best_key = key;
          best_row = r;
          best_col = c;
        }
      }
    }

    const IntRow& prow = rows[best_row];
    const BigInt pv = *find_entry(prow, best_col);
    pivots.emplace_back(best_row, best_col);
    is_pivot_col[best_col] = true;
    active.erase(std::find(active.begin(), active.end(), best_row));
    for (const auto& e : prow) --col_count[e.first];

    std::vector<std::size_t> next_active;
    next_active.reserve(active.size());
    BigInt g, sp, sa;
    for (std::size_t r : active) {
      const BigInt* av = find_entry(rows[r], best_col);
      if (av != nullptr) {
        mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), av->get_mpz_t());
        mpz_divexact(sp.get_mpz_t(), pv.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(sa.get_mpz_t(), av->get_mpz_t(), g.get_mpz_t());
        for (const auto& e : rows[r]) --col_count[e.first];
        rows[r] = combine(rows[r], prow, sp, sa);
        for (const auto& e : rows[r]) ++col_count[e.first];
      }
      if (!rows[r].empty()) next_active.push_back(r);
    }
    active = std::move(next_active);

    std::size_t nnz = 0;
    for (std::size_t r : active) {
      nnz += rows[r].size();
      for (const auto& e : rows[r]) {
        result.stats.max_entry_bits = std::max(result.stats.max_entry_bits, mpz_sizeinbase(e.second.get_mpz_t(), 2));
      }
    }
    result.stats.peak_nonzeros = std::max(result.stats.peak_nonzeros, nnz);
  }

  result.rank = pivots.size();
  result.stats.pivots = pivots.size();

  // Back substitution, one basis vector per free column.
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Rational> x(ncols);
    x[f] = Rational(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto [r, pc] = *it;
      Rational s;
      BigInt pivot_value;
      for (const auto& [c, v] : rows[r]) {
        if (c == pc) pivot_value = v;
        else if (!x[c].is_zero()) s += Rational(v) * x[c];
      }
      x[pc] = -s / Rational(pivot_value);
    }
    BigInt l = 1;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    std::vector<BigInt> iv(ncols);
    BigInt g = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      iv[j] = x[j].num() * (l / x[j].den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
    }
    int lead_sign = 0;
    for (const auto& v : iv) {
      if (v != 0) { lead_sign = sgn(v); break; }
    }
    if (lead_sign < 0) g = -g;
    for (auto& v : iv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    result.basis.push_back(std::move(iv));
  }
  return result;
}

}  // namespace tqasm
