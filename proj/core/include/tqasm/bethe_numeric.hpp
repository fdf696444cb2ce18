#ifndef TQASM_BETHE_NUMERIC_HPP
#define TQASM_BETHE_NUMERIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tqasm/rational.hpp"

namespace tqasm {

/// 113-bit significand float, used when --precision asks for more than a
/// long double provides.
using QuadFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<113, boost::multiprecision::digit_base_2>,
                                                boost::multiprecision::et_off>;
/// 256-bit significand float.
using WideFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
                                                boost::multiprecision::et_off>;

/// Tolerances for the numeric checks. All comparisons read from here.
struct NumericTolerances {
  double root_step = 1e-12;        // Aberth stopping criterion (relative step)
  int max_iterations = 1000;
  double pairing = 1e-10;          // |z_m z_{M-m+1} - 1|
  double bethe_residual = 1e-9;    // Bethe equations
  double energy = 1e-9;            // |E + 3N/4|
  double transfer = 1e-8;          // relative transfer-eigenvalue residual
  double pole_guard = 1e-6;        // sample rejection near poles of U, V
  double oracle = 1e-7;            // Bethe vector vs exact components
  double esym = 1e-9;              // numeric e_r vs exact e_r
};

/// Bethe roots z_1..z_M ordered so that z_m z_{M-m+1} = 1, and their
/// u-parameters, z = (t^2 u^2 - 1)/(u^2 - t^2), with u_m^{-1} = -u_{M-m+1}.
template <class Real>
struct BetheRootSet {
  int m = 0;
  std::vector<std::complex<Real>> z;
  std::vector<std::complex<Real>> u;
  int iterations = 0;
};

/// Roots of chi(z) built from the exact e_r, by Aberth iteration started on
/// a circle with a fixed angular offset. Throws NonConvergence or
/// InvariantViolation (pairing).
template <class Real>
BetheRootSet<Real> roots_of_chi(int m, const NumericTolerances& tol = {});

/// z(u) = (t^2 u^2 - 1)/(u^2 - t^2).
template <class Real>
std::complex<Real> z_of_u(const std::complex<Real>& u);

/// max_k |chi(z_k)|.
template <class Real>
Real chi_residual(const BetheRootSet<Real>& rs);

/// max_m |z_m z_{M-m+1} - 1|.
template <class Real>
Real pairing_error(const BetheRootSet<Real>& rs);

/// e_0..e_M of the numeric roots.
template <class Real>
std::vector<std::complex<Real>> esym_from_roots(const BetheRootSet<Real>& rs);

/// max_k |z_k^N - (-1)^{K-1} prod_l f(z_l, z_k)/f(z_k, z_l)|, f(a, b) = 1 - 2 delta b + a b.
/// Throws InvariantViolation if some f(z_k, z_l) vanishes.
template <class Real>
Real bethe_residual(const BetheRootSet<Real>& rs, const Rational& delta = Rational(-1, 2), int n = 0);

/// E = -delta N / 2 + sum_k (2 delta - z_k - 1/z_k).
template <class Real>
std::complex<Real> energy(const BetheRootSet<Real>& rs, const Rational& delta, int n);

template <class Real>
struct TransferCheck {
  Real max_residual = 0;  // max |lambda(u) - sigma^N(u)| / |sigma^N(u)|
  std::size_t evaluated = 0;
  std::vector<std::complex<Real>> rejected;  // samples too close to a pole
};

/// lambda(u) = a^N prod U(u, z_k) + b^N prod V(u, z_k), a = sigma(t u),
/// b = sigma(u / t), c = sigma(t^2), compared with sigma(u)^N.
template <class Real>
TransferCheck<Real> transfer_eigenvalue_check(const BetheRootSet<Real>& rs,
                                              const std::vector<std::complex<Real>>& samples,
                                              const NumericTolerances& tol = {});

/// `count` points on |u| = radius at uniformly random angles (seeded).
template <class Real>
std::vector<std::complex<Real>> circle_samples(std::size_t count, double radius, std::uint64_t seed);

/// Psi^{n_1..n_K} = sum_s A_s z_{s(1)}^{n_1} ... z_{s(K)}^{n_K},
/// A_s = sgn(s) prod_{k1<k2} f(z_{s(k2)}, z_{s(k1)}), over enumerate_sector(N, M).
/// Requires M <= 6.
template <class Real>
std::vector<std::complex<Real>> bethe_vector_oracle(const BetheRootSet<Real>& rs, int n,
                                                    const Rational& delta = Rational(-1, 2));

/// Scales `oracle` so its smallest-magnitude component is 1 and returns
/// the largest relative componentwise deviation from `exact`.
template <class Real>
Real oracle_deviation(const std::vector<std::complex<Real>>& oracle, const std::vector<Rational>& exact);

}  // namespace tqasm

#endif  // TQASM_BETHE_NUMERIC_HPP
