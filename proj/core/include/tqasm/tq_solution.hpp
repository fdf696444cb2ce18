#ifndef TQASM_TQ_SOLUTION_HPP
#define TQASM_TQ_SOLUTION_HPP

#include <optional>
#include <vector>

#include "tqasm/laurent.hpp"
#include "tqasm/report.hpp"

namespace tqasm {

/// phi(u) = sigma(u)^N xi(u) for the delta = -1/2 solution of the scalar
/// T-Q equation, N = 2M + 1.
struct PhiPolynomial {
  int m = 0;
  RatLaurent poly;
  /// Prefactor 1 / binom(M - 1/3, M).
  Rational normalization;
};

/// xi(u) = phi(u) / sigma(u)^{2M+1}; palindromic with leading coefficient 1.
struct XiPolynomial {
  int m = 0;
  RatLaurent poly;
};

/// phi(u) = binom(M-1/3, M)^-1 sum_{m=0}^{M} binom(M-1/3, m) binom(M+1/3, M-m) sigma(u^{1-3M+6m}),
/// with the fractional binomials evaluated exactly. The structural
/// invariants (span 6M+2, inversion antisymmetry, parity, no exponent
/// divisible by 3, divisibility by sigma^{2M+1}) are asserted here and
/// raise InvariantViolation.
PhiPolynomial build_phi(int m);

/// Exact quotient by sigma(u)^{2M+1}; asserts span 2M, xi(1/u) = xi(u) and
/// unit leading coefficient.
XiPolynomial build_xi(const PhiPolynomial& phi);

/// phi(u) + phi(t^2 u) + phi(t^4 u) as a full polynomial over Q(t).
CycloLaurent cyclic_sum(const PhiPolynomial& phi);

/// phi(u) + phi(t^2 u) + phi(t^4 u) = 0, checked per exponent: the
/// coefficient at k is scaled by 1 + t^{2k} + t^{4k}, which is 3 when
/// 3 | k and 0 otherwise.
VerificationReport check_cyclic(const PhiPolynomial& phi);

/// phi(1/u) = -phi(u), phi(-u) = (-1)^{M+1} phi(u), span 6M+2, and
/// exact divisibility by sigma(u)^{2M+1}; one payload line per failure.
VerificationReport check_symmetries(const PhiPolynomial& phi);

/// The cleared-denominator form of the second-order equation for phi,
///   (u^6-1) D^2 phi - 6M (u^6+1) D phi + (3M+1)(3M-1)(u^6-1) phi = 0,
/// D = u d/du, as an exact Laurent identity.
RatLaurent phi_ode_residual(const PhiPolynomial& phi);
VerificationReport check_phi_ode(const PhiPolynomial& phi);

/// lambda(u) xi(u) = sigma^N(t u) xi(t^-2 u) + sigma^N(t^-1 u) xi(t^2 u)
/// over Q(t). lambda defaults to sigma(u)^N.
CycloLaurent tq_residual(const XiPolynomial& xi, const std::optional<RatLaurent>& lambda = std::nullopt);
VerificationReport check_tq_identity(const XiPolynomial& xi, const std::optional<RatLaurent>& lambda = std::nullopt);

/// Coefficients of chi(z) = prod (z - z_m), ascending powers of z, from
///   chi(z) sigma^M(t^-1 u) = sigma^M(t^2) xi(u) / xi(t),  z = sigma(t u)/sigma(t^-1 u),
/// by an exact linear solve over Q(t). Throws InvariantViolation if the
/// system is inconsistent, rank deficient, or a coefficient is not rational.
std::vector<Rational> chi_via_field(int m);

/// Checks a candidate chi (ascending coefficients) against the same
/// field identity without solving.
VerificationReport verify_chi_candidate(int m, const std::vector<Rational>& chi);

/// Dimension of the space of Laurent polynomials phi = sigma^{2M+1} q,
/// q supported on [-M, M], satisfying the cyclic identity, inversion
/// antisymmetry and the parity rule. Expected to be 1.
std::size_t phi_solution_space_dimension(int m);

}  // namespace tqasm

#endif  // TQASM_TQ_SOLUTION_HPP
