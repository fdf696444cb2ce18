#include "tqasm/symfun.hpp"

#include <stdexcept>
#include <string>

#include "tqasm/asm_numbers.hpp"

namespace tqasm {

namespace {
std::string param(int m) { return "M=" + std::to_string(m); }
}  // namespace

Rational ChiPolynomial::eval(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ChiPolynomial ChiPolynomial::derivative() const {
  ChiPolynomial d;
  d.m = m;
  for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(coeffs[k] * Rational(static_cast<long>(k)));
  return d;
}

ElementarySymmetricList elementary_sym(int m) {
  if (m < 1) throw std::invalid_argument("M must be >= 1, got " + std::to_string(m));
  ElementarySymmetricList e;
  e.m = m;
  e.values.reserve(static_cast<std::size_t>(m + 1));
  e.values.emplace_back(1);
  for (int r = 1; r <= m; ++r) {
    const Rational ratio(BigInt(static_cast<long>(m - r + 1) * (m + r)), BigInt(static_cast<long>(2 * m - r + 1) * r));
    e.values.push_back(e.values.back() * ratio);
  }
  return e;
}

ChiPolynomial chi_from_esym(const ElementarySymmetricList& e) {
  ChiPolynomial chi;
  chi.m = e.m;
  chi.coeffs.resize(static_cast<std::size_t>(e.m + 1));
  for (int r = 0; r <= e.m; ++r) {
    chi.coeffs[static_cast<std::size_t>(e.m - r)] = r % 2 == 0 ? e[r] : -e[r];
  }
  return chi;
}

VerificationReport check_asm_relation(int m) {
  return timed_check("esym_asm_relation", param(m), CheckMode::Exact, [&] {
    VerificationReport rep;
    rep.passed = true;
    const auto e = elementary_sym(m);
    const Rational total(asm_total(m));
    for (int r = 0; r <= m; ++r) {
      const Rational expected = Rational(asm_refined(m + 1, r + 1)) / total;
      if (e[r] != expected) rep.fail("r=" + std::to_string(r), e[r].to_string() + " != " + expected.to_string());
    }
    rep.add("A(M)", asm_total(m).get_str());
    return rep;
  });
}

std::vector<Rational> chi_ode_residual(const ChiPolynomial& chi) {
  const int m = chi.m;
  const auto d1 = chi.derivative();
  const auto d2 = d1.derivative();
  std::vector<Rational> res(chi.coeffs.size() + 1);
  auto coeff = [](const ChiPolynomial& p, std::size_t k) { return k < p.coeffs.size() ? p.coeffs[k] : Rational(0); };
  const Rational mm(m);
  for (std::size_t k = 0; k < res.size(); ++k) {
    Rational v;
    // z^2 chi'' + z chi''
    if (k >= 2) v += coeff(d2, k - 2);
    if (k >= 1) v += coeff(d2, k - 1);
    // 2 z chi' - 2M chi'
    if (k >= 1) v += Rational(2) * coeff(d1, k - 1);
    v -= Rational(2) * mm * coeff(d1, k);
    v -= mm * (mm + Rational(1)) * coeff(chi, k);
    res[k] = std::move(v);
  }
  while (!res.empty() && res.back().is_zero()) res.pop_back();
  return res;
}

VerificationReport check_chi_ode(const ChiPolynomial& chi) {
  return timed_check("chi_ode", param(chi.m), CheckMode::Exact, [&] {
    VerificationReport rep;
    const auto res = chi_ode_residual(chi);
    rep.passed = res.empty();
    for (std::size_t k = 0; k < res.size(); ++k) {
      if (!res[k].is_zero()) rep.add("z^" + std::to_string(k), res[k].to_string());
    }
    return rep;
  });
}

VerificationReport check_energy_consequence(int m) {
  return timed_check("energy_from_e1", param(m), CheckMode::Exact, [&] {
    VerificationReport rep;
    const Rational n(2 * m + 1);
    const Rational delta(-1, 2);
    const auto e = elementary_sym(m);
    const Rational energy = -delta * n / Rational(2) + Rational(2) * delta * Rational(m) - e[1] - e[1];
    const Rational expected = Rational(-3) * n / Rational(4);
    rep.passed = energy == expected;
    rep.add("energy", energy.to_string());
    rep.add("expected", expected.to_string());
    return rep;
  });
}

VerificationReport check_esym_invariants(const ElementarySymmetricList& e) {
  return timed_check("esym_invariants", param(e.m), CheckMode::Exact, [&] {
    VerificationReport rep;
    rep.passed = true;
    const int m = e.m;
    if (e[0] != Rational(1)) rep.fail("e_0", e[0].to_string());
    if (e[m] != Rational(1)) rep.fail("e_M", e[m].to_string());
    if (e[1] != Rational(m + 1, 2)) rep.fail("e_1", e[1].to_string());
    for (int r = 0; r <= m; ++r) {
      if (e[r] != e[m - r]) rep.fail("palindrome r=" + std::to_string(r), e[r].to_string() + " != " + e[m - r].to_string());
    }
    return rep;
  });
}

}  // namespace tqasm
