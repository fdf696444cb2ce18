// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "data/reference_values.hpp"
#include "oracles/asm_bruteforce.hpp"
#include "tqasm/asm_numbers.hpp"
#include "tqasm/bethe_numeric.hpp"
#include "tqasm/spin_sector.hpp"
#include "tqasm/symfun.hpp"
#include "tqasm/tq_solution.hpp"

using namespace tqasm;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << what;
    ok = false;
  }
};

std::map<int, GroundCandidate>& ground_cache() {
  static std::map<int, GroundCandidate> cache;
  return cache;
}

const GroundCandidate& ground(int n) {
  auto& cache = ground_cache();
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ground_candidate(n)).first;
  return it->second;
}

bool run_criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= budget_s) {
    std::ostringstream msg;
    msg << "time " << secs << " s over budget " << budget_s << " s";
    o.expect(false, msg.str());
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, budget_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << timing << ")";
  if (!o.ok) std::cout << "  " << o.note.str();
  std::cout << std::endl;
  return o.ok;
}

std::string params(const char* key, int v) { return std::string(key) + "=" + std::to_string(v); }

}  // namespace

int main() {
  const NumericTolerances tol{};
  bool all = true;

  all &= run_criterion(1, "N=11 ground-state table", 10.0, [](Outcome& o) {
    const auto& gc = ground(11);
    o.expect(gc.nullity == 1, "nullity != 1");
    for (const auto& [pos, value] : reference::kN11Components) {
      SpinBasisState s{11, pos};
      o.expect(gc.psi.component(pos) == Rational(value), "component " + s.to_string());
    }
    o.expect(gc.psi.component({1, 2, 3, 4, 5}) == Rational(1), "minimal component");
    o.expect(gc.psi.component({1, 3, 5, 7, 9}) == Rational(429), "maximal component");
  });

  all &= run_criterion(2, "increment sums equal A(M+1, r+1) for odd N <= 17", 600.0, [](Outcome& o) {
    const auto& g11 = ground(11);
    o.expect(increment_sum(g11.psi, 1) == Rational(reference::kN11IncrementSum1), "N=11 r=1");
    o.expect(increment_sum(g11.psi, 2) == Rational(reference::kN11IncrementSum2), "N=11 r=2");
    for (int n = 3; n <= 17; n += 2) {
      const int m = (n - 1) / 2;
      const auto& gc = ground(n);
      o.expect(gc.integral && gc.positive, params("N", n) + " not a positive integer vector");
      for (int r = 0; r <= m; ++r) {
        o.expect(increment_sum(gc.psi, r) == Rational(asm_refined(m + 1, r + 1)),
                 params("N", n) + " " + params("r", r));
      }
    }
  });

  all &= run_criterion(3, "refined ASM table rows 1-7 and brute-force enumeration", 1.0, [](Outcome& o) {
    for (std::size_t m = 1; m <= reference::kAsmRows.size(); ++m) {
      for (std::size_t r = 1; r <= m; ++r) {
        o.expect(asm_refined(static_cast<int>(m), static_cast<int>(r)) == BigInt(reference::kAsmRows[m - 1][r - 1]),
                 "A(" + std::to_string(m) + "," + std::to_string(r) + ")");
      }
    }
    for (int m = 1; m <= 5; ++m) {
      const auto counts = oracle::asm_refined_bruteforce(m);
      for (int r = 1; r <= m; ++r) {
        o.expect(asm_refined(m, r) == BigInt(counts[static_cast<std::size_t>(r - 1)]),
                 "brute force M=" + std::to_string(m));
      }
    }
  });

  all &= run_criterion(4, "T-Q identities for M <= 12 and uniqueness for M <= 4", 30.0, [](Outcome& o) {
    for (int m = 1; m <= 12; ++m) {
      const PhiPolynomial phi = build_phi(m);
      o.expect(check_cyclic(phi).passed, params("M", m) + " cyclic");
      o.expect(check_symmetries(phi).passed, params("M", m) + " symmetries");
      o.expect(phi.poly.span() == 6 * m + 2, params("M", m) + " degree");
      o.expect(check_phi_ode(phi).passed, params("M", m) + " ODE");
      o.expect(check_tq_identity(build_xi(phi)).passed, params("M", m) + " scalar T-Q");
    }
    for (int m = 1; m <= 4; ++m) {
      o.expect(phi_solution_space_dimension(m) == 1, params("M", m) + " solution space");
    }
  });

  all &= run_criterion(5, "elementary symmetric values equal ASM ratios for M <= 30", 1.0, [](Outcome& o) {
    for (int m = 1; m <= 30; ++m) {
      const auto e = elementary_sym(m);
      const Rational total(asm_total(m));
      for (int r = 0; r <= m; ++r) {
        o.expect(e[r] == Rational(asm_refined(m + 1, r + 1)) / total, params("M", m) + " " + params("r", r));
        o.expect(e[r] == e[m - r], params("M", m) + " palindrome");
      }
      o.expect(e[1] == Rational(m + 1, 2), params("M", m) + " e_1");
      o.expect(e[m] == Rational(1), params("M", m) + " e_M");
      o.expect(check_chi_ode(chi_from_esym(e)).passed, params("M", m) + " chi ODE");
    }
  });

  all &= run_criterion(6, "three routes to e_r agree for odd N <= 17", 600.0, [](Outcome& o) {
    for (int n = 3; n <= 17; n += 2) {
      const int m = (n - 1) / 2;
      const auto e = elementary_sym(m);
      const auto chi = chi_via_field(m);
      const auto& gc = ground(n);
      const Rational f = gc.psi.max_component();
      for (int r = 0; r <= m; ++r) {
        const Rational signed_e = (r % 2 == 0) ? e[r] : -e[r];
        o.expect(chi[static_cast<std::size_t>(m - r)] == signed_e, params("N", n) + " field route r=" + std::to_string(r));
        o.expect(increment_sum(gc.psi, r) / f == e[r], params("N", n) + " component route r=" + std::to_string(r));
      }
    }
  });

  all &= run_criterion(7, "Bethe roots, pairing, energy and transfer eigenvalue for M <= 10", 10.0, [&](Outcome& o) {
    for (int m = 1; m <= 10; ++m) {
      const int n = 2 * m + 1;
      const auto rs = roots_of_chi<double>(m, tol);
      o.expect(bethe_residual(rs) < tol.bethe_residual, params("M", m) + " Bethe residual");
      o.expect(pairing_error(rs) < tol.pairing, params("M", m) + " pairing");
      o.expect(std::abs(energy(rs, Rational(-1, 2), n) + 0.75 * n) < tol.energy, params("M", m) + " energy");
      const auto tc = transfer_eigenvalue_check(rs, circle_samples<double>(20, 2.0, 20061), tol);
      o.expect(tc.evaluated == 20, params("M", m) + " rejected samples");
      o.expect(tc.max_residual < tol.transfer, params("M", m) + " transfer eigenvalue");
    }
  });

  all &= run_criterion(8, "Bethe-vector oracle matches the exact eigenvector for M <= 5", 60.0, [&](Outcome& o) {
    for (int m = 1; m <= 5; ++m) {
      const int n = 2 * m + 1;
      const auto rs = roots_of_chi<double>(m, tol);
      const double dev = oracle_deviation(bethe_vector_oracle(rs, n), ground(n).psi.expand());
      o.expect(dev < tol.oracle, params("M", m) + " deviation " + std::to_string(dev));
    }
  });

  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
