#ifndef TQASM_SYMFUN_HPP
#define TQASM_SYMFUN_HPP

#include <vector>

#include "tqasm/rational.hpp"
#include "tqasm/report.hpp"

namespace tqasm {

/// e_0 .. e_M of the Bethe roots of the delta = -1/2, N = 2M+1 solution.
struct ElementarySymmetricList {
  int m = 0;
  std::vector<Rational> values;

  const Rational& operator[](int r) const { return values.at(static_cast<std::size_t>(r)); }
};

/// chi(z) = prod_m (z - z_m) = sum_r (-1)^r e_r z^{M-r}.
struct ChiPolynomial {
  int m = 0;
  std::vector<Rational> coeffs;  // coeffs[k] multiplies z^k

  Rational eval(const Rational& z) const;
  ChiPolynomial derivative() const;
};

/// (2M - r + 1) r e_r = (M - r + 1)(M + r) e_{r-1}, e_0 = 1.
ElementarySymmetricList elementary_sym(int m);

ChiPolynomial chi_from_esym(const ElementarySymmetricList& e);

/// e_r = A(M+1, r+1) / A(M) for r = 0..M.
VerificationReport check_asm_relation(int m);

/// z(z+1) chi'' + 2(z - M) chi' - M(M+1) chi as a polynomial in z.
std::vector<Rational> chi_ode_residual(const ChiPolynomial& chi);
VerificationReport check_chi_ode(const ChiPolynomial& chi);

/// E = -delta N / 2 + sum_k (2 delta - z_k - 1/z_k) with
/// sum z_k = sum 1/z_k = e_1, delta = -1/2; must equal -3N/4.
VerificationReport check_energy_consequence(int m);

/// e_0 = e_M = 1, palindrome, e_1 = (M+1)/2.
VerificationReport check_esym_invariants(const ElementarySymmetricList& e);

}  // namespace tqasm

#endif  // TQASM_SYMFUN_HPP
