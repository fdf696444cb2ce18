#include "tqasm/bethe_numeric.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "tqasm/cyclo.hpp"
#include "tqasm/errors.hpp"
#include "tqasm/spin_sector.hpp"
#include "tqasm/symfun.hpp"

namespace tqasm {

namespace {

template <class Real>
using Cx = std::complex<Real>;

template <class Real>
Cx<Real> tau_c() {
  return to_complex<Real>(CycloQ6::tau());
}

template <class Real>
Cx<Real> sigma_c(const Cx<Real>& x) {
  return x - Real(1) / x;
}

template <class Real>
Cx<Real> ipow(Cx<Real> x, int e) {
  Cx<Real> r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

template <class Real>
Real cabs(const Cx<Real>& x) {
  using std::abs;
  return abs(x);
}

template <class Real>
std::vector<Cx<Real>> chi_coefficients(int m) {
  const auto chi = chi_from_esym(elementary_sym(m));
  std::vector<Cx<Real>> c;
  for (const auto& q : chi.coeffs) c.emplace_back(to_real<Real>(q), Real(0));
  return c;
}

// p(z) and p'(z) by Horner; coefficients ascending.
template <class Real>
std::pair<Cx<Real>, Cx<Real>> horner(const std::vector<Cx<Real>>& c, const Cx<Real>& z) {
  Cx<Real> p(0), dp(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

template <class Real>
void order_reciprocal_pairs(BetheRootSet<Real>& rs, const NumericTolerances& tol) {
  using std::arg;
  std::vector<Cx<Real>> rest = rs.z;
  std::sort(rest.begin(), rest.end(), [](const Cx<Real>& a, const Cx<Real>& b) {
    const Real aa = arg(a), ab = arg(b);
    if (aa != ab) return aa < ab;
    return cabs(a) < cabs(b);
  });
  const std::size_t m = rest.size();
  std::vector<Cx<Real>> ordered(m);
  std::size_t front = 0, back = m;
  const Real ptol(tol.pairing);
  bool middle_placed = false;
  while (!rest.empty()) {
    const Cx<Real> a = rest.front();
    const Real self_err = cabs(Cx<Real>(a * a - Real(1)));
    std::size_t best = 0;
    Real best_err(-1);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      const Real err = cabs(Cx<Real>(a * rest[j] - Real(1)));
      if (best_err < 0 || err < best_err) {
        best_err = err;
        best = j;
      }
    }
    const bool can_be_middle = m % 2 == 1 && !middle_placed && self_err < ptol;
    if (can_be_middle && (best == 0 || !(best_err < self_err))) {
      ordered[m / 2] = a;
      middle_placed = true;
      rest.erase(rest.begin());
      continue;
    }
    if (best == 0 || !(best_err < ptol)) {
      throw InvariantViolation("Bethe roots: no reciprocal partner within tolerance for a root");
    }
    ordered[front++] = a;
    ordered[--back] = rest[best];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    rest.erase(rest.begin());
  }
  rs.z = std::move(ordered);
}

template <class Real>
Cx<Real> u_squared_of_z(const Cx<Real>& z) {
  const Cx<Real> t2 = tau_c<Real>() * tau_c<Real>();
  return (z * t2 - Real(1)) / (z - t2);
}

template <class Real>
void assign_u(BetheRootSet<Real>& rs) {
  using std::sqrt;
  const std::size_t m = rs.z.size();
  rs.u.assign(m, Cx<Real>(0));
  for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
    Cx<Real> u = sqrt(u_squared_of_z(rs.z[i]));
    if (u.imag() < 0 || (u.imag() == 0 && u.real() < 0)) u = -u;
    rs.u[i] = u;
    const std::size_t partner = m - 1 - i;
    if (partner != i) rs.u[partner] = -Real(1) / u;
  }
}

}  // namespace

template <class Real>
std::complex<Real> z_of_u(const std::complex<Real>& u) {
  const Cx<Real> t2 = tau_c<Real>() * tau_c<Real>();
  const Cx<Real> u2 = u * u;
  return (t2 * u2 - Real(1)) / (u2 - t2);
}

template <class Real>
BetheRootSet<Real> roots_of_chi(int m, const NumericTolerances& tol) {
  using std::cos;
  using std::sin;
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  const auto c = chi_coefficients<Real>(m);
  const Real pi = boost::math::constants::pi<Real>();
  const Real radius = Real(11) / Real(10);
  const Real offset = Real(2) / Real(5);

  BetheRootSet<Real> rs;
  rs.m = m;
  for (int k = 0; k < m; ++k) {
    const Real ang = Real(2) * pi * Real(k) / Real(m) + offset;
    rs.z.emplace_back(radius * cos(ang), radius * sin(ang));
  }

  const Real step_tol(tol.root_step);
  bool converged = false;
  int it = 0;
  for (; it < tol.max_iterations && !converged; ++it) {
    Real max_step(0);
    for (int k = 0; k < m; ++k) {
      auto [p, dp] = horner(c, rs.z[static_cast<std::size_t>(k)]);
      if (p == Cx<Real>(0)) continue;
      const Cx<Real> ratio = p / dp;
      Cx<Real> repulsion(0);
      for (int j = 0; j < m; ++j) {
        if (j != k) repulsion += Real(1) / (rs.z[static_cast<std::size_t>(k)] - rs.z[static_cast<std::size_t>(j)]);
      }
      const Cx<Real> step = ratio / (Real(1) - ratio * repulsion);
      rs.z[static_cast<std::size_t>(k)] -= step;
      const Real rel = cabs(step) / std::max(Real(1), cabs(rs.z[static_cast<std::size_t>(k)]));
      max_step = std::max(max_step, rel);
    }
    converged = max_step < step_tol;
  }
  if (!converged) throw NonConvergence("Aberth iteration for chi did not converge for M=" + std::to_string(m));
  // Two Newton polishing steps.
  for (int pass = 0; pass < 2; ++pass) {
    for (auto& z : rs.z) {
      auto [p, dp] = horner(c, z);
      if (dp != Cx<Real>(0)) z -= p / dp;
    }
  }
  rs.iterations = it;
  order_reciprocal_pairs(rs, tol);
  assign_u(rs);
  return rs;
}

template <class Real>
Real chi_residual(const BetheRootSet<Real>& rs) {
  const auto c = chi_coefficients<Real>(rs.m);
  Real worst(0);
  for (const auto& z : rs.z) worst = std::max(worst, cabs(horner(c, z).first));
  return worst;
}

template <class Real>
Real pairing_error(const BetheRootSet<Real>& rs) {
  Real worst(0);
  const std::size_t m = rs.z.size();
  for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, cabs(Cx<Real>(rs.z[i] * rs.z[m - 1 - i] - Real(1))));
  return worst;
}

template <class Real>
std::vector<std::complex<Real>> esym_from_roots(const BetheRootSet<Real>& rs) {
  std::vector<Cx<Real>> e(rs.z.size() + 1, Cx<Real>(0));
  e[0] = Cx<Real>(1);
  for (std::size_t i = 0; i < rs.z.size(); ++i) {
    for (std::size_t r = i + 1; r >= 1; --r) e[r] += e[r - 1] * rs.z[i];
  }
  return e;
}

template <class Real>
Real bethe_residual(const BetheRootSet<Real>& rs, const Rational& delta, int n) {
  const int k = static_cast<int>(rs.z.size());
  if (n == 0) n = 2 * k + 1;
  const Real d = to_real<Real>(delta);
  auto f = [&](const Cx<Real>& a, const Cx<Real>& b) { return Real(1) - Real(2) * d * b + a * b; };
  const Real sign = (k - 1) % 2 == 0 ? Real(1) : Real(-1);
  Real worst(0);
  for (int i = 0; i < k; ++i) {
    const Cx<Real>& zk = rs.z[static_cast<std::size_t>(i)];
    Cx<Real> rhs(sign);
    for (int l = 0; l < k; ++l) {
      const Cx<Real>& zl = rs.z[static_cast<std::size_t>(l)];
      const Cx<Real> den = f(zk, zl);
      if (cabs(den) < Real(1e-300) || cabs(den) == Real(0)) {
        throw InvariantViolation("Bethe equations: f(z_k, z_l) vanishes");
      }
      rhs *= f(zl, zk) / den;
    }
    worst = std::max(worst, cabs(Cx<Real>(ipow(zk, n) - rhs)));
  }
  return worst;
}

template <class Real>
std::complex<Real> energy(const BetheRootSet<Real>& rs, const Rational& delta, int n) {
  const Real d = to_real<Real>(delta);
  Cx<Real> e(-d * Real(n) / Real(2));
  for (const auto& z : rs.z) e += Real(2) * d - z - Real(1) / z;
  return e;
}

template <class Real>
TransferCheck<Real> transfer_eigenvalue_check(const BetheRootSet<Real>& rs,
                                              const std::vector<std::complex<Real>>& samples,
                                              const NumericTolerances& tol) {
  const int n = 2 * rs.m + 1;
  const Cx<Real> t = tau_c<Real>();
  const Cx<Real> c = sigma_c(Cx<Real>(t * t));
  const Real guard(tol.pole_guard);
  TransferCheck<Real> out;
  for (const auto& u : samples) {
    const Cx<Real> a = sigma_c(Cx<Real>(t * u));
    const Cx<Real> b = sigma_c(Cx<Real>(u / t));
    bool near_pole = cabs(a) < guard || cabs(b) < guard;
    for (const auto& z : rs.z) {
      if (cabs(Cx<Real>(a - b * z)) < guard * (cabs(a) + cabs(b) * cabs(z))) near_pole = true;
    }
    if (near_pole) {
      out.rejected.push_back(u);
      continue;
    }
    Cx<Real> pu(1), pv(1);
    for (const auto& z : rs.z) {
      pu *= (a * b + (c * c - b * b) * z) / (a * a - a * b * z);
      pv *= (a * a - c * c - a * b * z) / (a * b - b * b * z);
    }
    const Cx<Real> lambda = ipow(a, n) * pu + ipow(b, n) * pv;
    const Cx<Real> expected = ipow(sigma_c(u), n);
    out.max_residual = std::max(out.max_residual, cabs(Cx<Real>(lambda - expected)) / cabs(expected));
    ++out.evaluated;
  }
  return out;
}

template <class Real>
std::vector<std::complex<Real>> circle_samples(std::size_t count, double radius, std::uint64_t seed) {
  using std::cos;
  using std::sin;
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * boost::math::constants::pi<double>());
  std::vector<Cx<Real>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Real a(angle(gen));
    out.emplace_back(Real(radius) * cos(a), Real(radius) * sin(a));
  }
  return out;
}

template <class Real>
std::vector<std::complex<Real>> bethe_vector_oracle(const BetheRootSet<Real>& rs, int n, const Rational& delta) {
  const int k = static_cast<int>(rs.z.size());
  if (k > 6) throw std::invalid_argument("bethe_vector_oracle: M <= 6 required");
  const Real d = to_real<Real>(delta);
  auto f = [&](const Cx<Real>& a, const Cx<Real>& b) { return Real(1) - Real(2) * d * b + a * b; };

  // powers[j][p] = z_j^p
  std::vector<std::vector<Cx<Real>>> powers(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    auto& row = powers[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(n + 1));
    row[0] = Cx<Real>(1);
    for (int p = 1; p <= n; ++p) row[static_cast<std::size_t>(p)] = row[static_cast<std::size_t>(p - 1)] * rs.z[static_cast<std::size_t>(j)];
  }

  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, Cx<Real>>> terms;
  do {
    int inversions = 0;
    Cx<Real> amp(1);
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        amp *= f(rs.z[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])],
                 rs.z[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]);
      }
    }
    if (inversions % 2 == 1) amp = -amp;
    terms.emplace_back(perm, amp);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Cx<Real>> out;
  for (const auto& s : enumerate_sector(n, k)) {
    Cx<Real> sum(0);
    for (const auto& [p, amp] : terms) {
      Cx<Real> prod = amp;
      for (int j = 0; j < k; ++j) {
        prod *= powers[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])][static_cast<std::size_t>(s.positions[static_cast<std::size_t>(j)])];
      }
      sum += prod;
    }
    out.push_back(sum);
  }
  return out;
}

template <class Real>
Real oracle_deviation(const std::vector<std::complex<Real>>& oracle, const std::vector<Rational>& exact) {
  if (oracle.size() != exact.size() || oracle.empty()) throw std::invalid_argument("oracle_deviation: size mismatch");
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < oracle.size(); ++i) {
    if (cabs(oracle[i]) < cabs(oracle[smallest])) smallest = i;
  }
  if (cabs(oracle[smallest]) == Real(0)) throw InvariantViolation("Bethe vector has a zero component");
  const Cx<Real> scale = oracle[smallest];
  const Real ref = to_real<Real>(exact[smallest]);
  Real worst(0);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    const Cx<Real> v = oracle[i] / scale * ref;
    const Real x = to_real<Real>(exact[i]);
    const Real mag = x < Real(0) ? Real(-x) : x;
    if (mag == Real(0)) throw InvariantViolation("exact vector has a zero component");
    worst = std::max(worst, cabs(Cx<Real>(v - x)) / mag);
  }
  return worst;
}

#define TQASM_INSTANTIATE_BETHE(Real)                                                                           \
  template BetheRootSet<Real> roots_of_chi<Real>(int, const NumericTolerances&);                                \
  template std::complex<Real> z_of_u<Real>(const std::complex<Real>&);                                          \
  template Real chi_residual<Real>(const BetheRootSet<Real>&);                                                  \
  template Real pairing_error<Real>(const BetheRootSet<Real>&);                                                 \
  template std::vector<std::complex<Real>> esym_from_roots<Real>(const BetheRootSet<Real>&);                    \
  template Real bethe_residual<Real>(const BetheRootSet<Real>&, const Rational&, int);                          \
  template std::complex<Real> energy<Real>(const BetheRootSet<Real>&, const Rational&, int);                    \
  template TransferCheck<Real> transfer_eigenvalue_check<Real>(                                                 \
      const BetheRootSet<Real>&, const std::vector<std::complex<Real>>&, const NumericTolerances&);              \
  template std::vector<std::complex<Real>> circle_samples<Real>(std::size_t, double, std::uint64_t);            \
  template std::vector<std::complex<Real>> bethe_vector_oracle<Real>(const BetheRootSet<Real>&, int,            \
                                                                     const Rational&);                          \
  template Real oracle_deviation<Real>(const std::vector<std::complex<Real>>&, const std::vector<Rational>&);

TQASM_INSTANTIATE_BETHE(double)
TQASM_INSTANTIATE_BETHE(long double)
TQASM_INSTANTIATE_BETHE(QuadFloat)
TQASM_INSTANTIATE_BETHE(WideFloat)

#undef TQASM_INSTANTIATE_BETHE

}  // namespace tqasm
