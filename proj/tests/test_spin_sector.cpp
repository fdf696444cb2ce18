#include <algorithm>
#include <cmath>
#include <map>

#include "data/reference_values.hpp"
#include "doctest.h"
#include "oracles/dense_linalg.hpp"
#include "oracles/pauli_hamiltonian.hpp"
#include "tqasm/asm_numbers.hpp"
#include "tqasm/errors.hpp"
#include "tqasm/spin_sector.hpp"
#include "tqasm/symfun.hpp"

using namespace tqasm;

namespace {

using Action = std::map<std::vector<int>, Rational>;

Action act(const SpinBasisState& s, const Rational& delta) {
  Action out;
  for (const auto& [t, c] : hamiltonian_action(s, delta)) out[t.positions] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <class Op>
Action map_action(const Action& a, int n, Op op) {
  Action out;
  for (const auto& [pos, c] : a) out[op(SpinBasisState{n, pos}).positions] += c;
  return out;
}

// Entries of the Pauli Hamiltonian for the deltas used here are multiples of 1/12.
Rational grid_round(double x) { return Rational(std::lround(12.0 * x), 12); }

std::vector<Rational> normalize_by_min(std::vector<Rational> v) {
  Rational lo;
  for (const auto& x : v)
    if (!x.is_zero() && (lo.is_zero() || abs(x) < lo)) lo = abs(x);
  if (v.front() < Rational(0)) lo = -lo;
  for (auto& x : v) x /= lo;
  return v;
}

}  // namespace

TEST_CASE("sector enumeration") {
  const auto s = enumerate_sector(3, 1);
  REQUIRE(s.size() == 3);
  CHECK(s[0].positions == std::vector<int>{1});
  CHECK(s[2].positions == std::vector<int>{3});
  CHECK(enumerate_sector(11, 5).size() == 462);
  CHECK(enumerate_sector(17, 8).size() == 24310);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK_THROWS(enumerate_sector(31, 1));
  CHECK_THROWS(enumerate_sector(5, 6));
}

TEST_CASE("basis state helpers") {
  const SpinBasisState s{7, {2, 5, 7}};
  CHECK(SpinBasisState::from_mask(7, s.mask()) == s);
  CHECK(s.to_string() == "2,5,7");
  CHECK(shift(s).positions == std::vector<int>{1, 4, 6});
  CHECK(reflect(s).positions == std::vector<int>{1, 3, 6});
  CHECK(spin_flip(s).positions == std::vector<int>{1, 3, 4, 6});
}

TEST_CASE("Hamiltonian action for N=3") {
  const Rational delta(-1, 2);
  const auto a = act(SpinBasisState{3, {1}}, delta);
  CHECK(a.at({1}) == Rational(-1, 4));
  CHECK(a.at({2}) == Rational(-1));
  CHECK(a.at({3}) == Rational(-1));
  // uniform vector has energy -9/4
  Rational total;
  for (const auto& [pos, c] : a) total += c;
  CHECK(total == Rational(-9, 4));
}

TEST_CASE("Hamiltonian matches the Pauli-matrix oracle") {
  for (int n = 2; n <= 7; ++n) {
    for (const Rational& delta : {Rational(-1, 2), Rational(1, 3), Rational(0)}) {
      const auto h = oracle::xxz_hamiltonian(n, delta.to_double());
      for (int k = 0; k <= n; ++k) {
        const auto states = enumerate_sector(n, k);
        for (const auto& s : states) {
          const auto a = act(s, delta);
          for (const auto& t : states) {
            const auto entry = h[oracle::full_index(n, t.positions)][oracle::full_index(n, s.positions)];
            const auto it = a.find(t.positions);
            const Rational mine = it == a.end() ? Rational(0) : it->second;
            CHECK(std::abs(entry.imag()) < 1e-12);
            CHECK(mine == grid_round(entry.real()));
          }
        }
      }
    }
  }
}

TEST_CASE("Hamiltonian commutes with S, R, P and preserves the sector") {
  const Rational delta(-1, 2);
  for (int n = 2; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& s : enumerate_sector(n, k)) {
        const auto a = act(s, delta);
        for (const auto& [pos, c] : a) CHECK(pos.size() == static_cast<std::size_t>(k));
        CHECK(act(shift(s), delta) == map_action(a, n, [](const SpinBasisState& x) { return shift(x); }));
        CHECK(act(reflect(s), delta) == map_action(a, n, [](const SpinBasisState& x) { return reflect(x); }));
        CHECK(act(spin_flip(s), delta) == map_action(a, n, [](const SpinBasisState& x) { return spin_flip(x); }));
      }
    }
  }
}

TEST_CASE("orbit decomposition") {
  const auto o3 = orbit_decompose(3, 1);
  REQUIRE(o3.size() == 1);
  CHECK(o3[0].size() == 3);
  const auto o5 = orbit_decompose(5, 2);
  REQUIRE(o5.size() == 2);
  CHECK(o5[0].representative.positions == std::vector<int>{1, 2});
  CHECK(o5[1].representative.positions == std::vector<int>{1, 3});
  CHECK(orbit_decompose(11, 5).size() == 26);
  std::size_t total = 0;
  for (const auto& o : orbit_decompose(11, 5)) {
    total += o.size();
    CHECK(std::all_of(o.members.begin(), o.members.end(),
                      [&](const SpinBasisState& m) { return o.representative <= m; }));
  }
  CHECK(total == 462);
}

TEST_CASE("ground state matches the dense oracle for small N") {
  for (int n : {3, 5, 7}) {
    CAPTURE(n);
    const int k = (n - 1) / 2;
    const auto h = oracle::xxz_hamiltonian(n, -0.5);
    const auto states = enumerate_sector(n, k);
    oracle::DenseMatrix d(states.size(), std::vector<Rational>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = 0; j < states.size(); ++j) {
        d[i][j] = grid_round(
            h[oracle::full_index(n, states[i].positions)][oracle::full_index(n, states[j].positions)].real());
      }
      d[i][i] += Rational(3 * n, 4);
    }
    const auto ns = oracle::dense_nullspace(d);
    REQUIRE(ns.size() == 1);
    const auto expected = normalize_by_min(ns[0]);
    CHECK(ground_candidate_full(n) == expected);
    const auto gc = ground_candidate(n);
    CHECK(gc.psi.expand() == expected);
    CHECK(gc.nullity == 1);
    CHECK(gc.integral);
    CHECK(gc.positive);
  }
}

TEST_CASE("full-sector and reduced solves agree") {
  for (int n = 3; n <= 11; n += 2) {
    CAPTURE(n);
    CHECK(ground_candidate(n).psi.expand() == ground_candidate_full(n));
  }
}

TEST_CASE("N=11 reference components") {
  const auto gc = ground_candidate(11);
  for (const auto& [pos, value] : reference::kN11Components) CHECK(gc.psi.component(pos) == Rational(value));
  for (const auto& [pos, value] : reference::kN11SingleIncrements) CHECK(gc.psi.component(pos) == Rational(value));
  CHECK(gc.psi.component({2, 3, 5, 7, 9}) == Rational(169));
  CHECK(gc.psi.component({1, 3, 5, 8, 10}) == Rational(429));
  CHECK(gc.psi.component({9, 7, 5, 3, 1}) == Rational(429));
  CHECK(gc.psi.component({12, 13, 14, 15, 16}) == Rational(1));
  CHECK_THROWS(gc.psi.component({1, 2, 3}));
  CHECK(gc.psi.max_component() == Rational(429));
  CHECK(gc.psi.min_component() == Rational(1));
}

TEST_CASE("increment sums for N=11") {
  const auto gc = ground_candidate(11);
  CHECK(increment_sum(gc.psi, 0) == Rational(429));
  CHECK(increment_sum(gc.psi, 1) == Rational(reference::kN11IncrementSum1));
  CHECK(increment_sum(gc.psi, 2) == Rational(reference::kN11IncrementSum2));
  for (int r = 0; r <= 5; ++r) CHECK(decrement_sum(gc.psi, r) == increment_sum(gc.psi, r));
}

TEST_CASE("increment sums equal refined ASM numbers up to N=13") {
  for (int n = 3; n <= 13; n += 2) {
    const int m = (n - 1) / 2;
    const auto gc = ground_candidate(n);
    CHECK(gc.psi.max_component() == Rational(asm_total(m)));
    const auto e = elementary_sym(m);
    for (int r = 0; r <= m; ++r) {
      CHECK(increment_sum(gc.psi, r) == Rational(asm_refined(m + 1, r + 1)));
      CHECK(increment_sum(gc.psi, r) / gc.psi.max_component() == e[r]);
    }
  }
}

TEST_CASE("operator symmetry reports pass") {
  for (int n = 3; n <= 11; n += 2) {
    CAPTURE(n);
    const auto gc = ground_candidate(n);
    for (const auto& r : check_operator_symmetries(gc.psi)) {
      CAPTURE(r.check);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("tampered vector fails the symmetry reports") {
  const auto gc = ground_candidate(7);
  auto values = gc.psi.orbit_values();
  values.back() += Rational(1);
  const auto sector = std::make_shared<const SymmetrySector>(7, 3);
  const SectorVector bad(sector, values);
  bool any_failed = false;
  for (const auto& r : check_operator_symmetries(bad)) any_failed = any_failed || !r.passed;
  CHECK(any_failed);
}

TEST_CASE("preconditions") {
  CHECK_THROWS(ground_candidate(1));
  CHECK_THROWS(ground_candidate(4));
  CHECK_THROWS(ground_candidate(33));
}
