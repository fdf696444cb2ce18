#include "tqasm/tq_solution.hpp"

#include <stdexcept>
#include <string>

#include "tqasm/errors.hpp"
#include "tqasm/sparse_nullspace.hpp"

namespace tqasm {

namespace {

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("M must be >= 1, got " + std::to_string(m));
}

std::string param(int m) { return "M=" + std::to_string(m); }

RatLaurent sigma_power(int e) { return pow(sigma(1), static_cast<unsigned>(e)); }

// Gauss-Jordan over Q(t) for an overdetermined consistent system with full
// column rank; returns the unique solution.
std::vector<CycloQ6> solve_unique(std::vector<std::vector<CycloQ6>> a, std::vector<CycloQ6> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_row(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) throw InvariantViolation("chi extraction: rank deficient system");
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const CycloQ6 inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const CycloQ6 f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) throw InvariantViolation("chi extraction: inconsistent system");
  }
  std::vector<CycloQ6> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
  return x;
}

struct ChiSystem {
  std::vector<CycloLaurent> basis;  // basis[r] = sigma(t u)^{M-r} sigma(t^-1 u)^r
  CycloLaurent rhs;                 // sigma^M(t^2) xi(u) / xi(t)
};

ChiSystem chi_system(int m) {
  const auto phi = build_phi(m);
  const auto xi = build_xi(phi);
  const CycloQ6 t = CycloQ6::tau();
  const CycloLaurent a = scale_variable(sigma(1), t);
  const CycloLaurent b = scale_variable(sigma(1), t.inverse());
  ChiSystem sys;
  for (int r = 0; r <= m; ++r) {
    sys.basis.push_back(pow(a, static_cast<unsigned>(m - r)) * pow(b, static_cast<unsigned>(r)));
  }
  const CycloQ6 sigma_t2 = CycloQ6::tau_pow(2) - CycloQ6::tau_pow(-2);
  const CycloQ6 k = pow(sigma_t2, m) / evaluate(xi.poly, t);
  sys.rhs = promote(xi.poly) * k;
  return sys;
}

}  // namespace

PhiPolynomial build_phi(int m) {
  require_order(m);
  const Rational lo = Rational(m) - Rational(1, 3);
  const Rational hi = Rational(m) + Rational(1, 3);
  PhiPolynomial phi;
  phi.m = m;
  phi.normalization = Rational(1) / binomial(lo, m);
  for (int j = 0; j <= m; ++j) {
    const Rational c = phi.normalization * binomial(lo, j) * binomial(hi, m - j);
    phi.poly += sigma(1 - 3 * m + 6 * j) * c;
  }

  const auto report = check_symmetries(phi);
  if (!report.passed) {
    std::string why;
    for (const auto& [k, v] : report.payload) why += " " + k + "=" + v;
    throw InvariantViolation("phi for " + param(m) + " violates:" + why);
  }
  for (const auto& [k, c] : phi.poly.terms()) {
    if (k % 3 == 0) throw InvariantViolation("phi has a term at exponent divisible by 3: " + std::to_string(k));
  }
  return phi;
}

XiPolynomial build_xi(const PhiPolynomial& phi) {
  XiPolynomial xi;
  xi.m = phi.m;
  xi.poly = divide_exact(phi.poly, sigma_power(2 * phi.m + 1));
  if (xi.poly.span() != 2 * phi.m) throw InvariantViolation("xi span is " + std::to_string(xi.poly.span()));
  if (invert_variable(xi.poly) != xi.poly) throw InvariantViolation("xi(1/u) != xi(u)");
  if (xi.poly.leading_coeff() != Rational(1)) {
    throw InvariantViolation("xi leading coefficient is " + xi.poly.leading_coeff().to_string());
  }
  return xi;
}

CycloLaurent cyclic_sum(const PhiPolynomial& phi) {
  return promote(phi.poly) + scale_variable(phi.poly, CycloQ6::tau_pow(2)) +
         scale_variable(phi.poly, CycloQ6::tau_pow(4));
}

VerificationReport check_cyclic(const PhiPolynomial& phi) {
  return timed_check("tq_cyclic_identity", param(phi.m), CheckMode::Exact, [&] {
    VerificationReport r;
    r.passed = true;
    for (const auto& [k, c] : phi.poly.terms()) {
      const CycloQ6 factor = CycloQ6(1) + CycloQ6::tau_pow(2 * k) + CycloQ6::tau_pow(4 * k);
      const CycloQ6 term = CycloQ6(c) * factor;
      if (!term.is_zero()) r.fail("exponent", std::to_string(k) + " coefficient " + term.to_string());
    }
    r.add("terms", std::to_string(phi.poly.size()));
    return r;
  });
}

VerificationReport check_symmetries(const PhiPolynomial& phi) {
  VerificationReport r;
  r.check = "phi_symmetries";
  r.parameters = param(phi.m);
  r.passed = true;
  const int m = phi.m;
  if (invert_variable(phi.poly) != -phi.poly) r.fail("inversion", "phi(1/u) != -phi(u)");
  const Rational parity = (m + 1) % 2 == 0 ? Rational(1) : Rational(-1);
  if (scale_variable_rational(phi.poly, Rational(-1)) != phi.poly * parity) {
    r.fail("parity", "phi(-u) != " + parity.to_string() + "*phi(u)");
  }
  if (phi.poly.is_zero() || phi.poly.span() != 6 * m + 2) {
    r.fail("degree", "span " + std::to_string(phi.poly.span()) + " != " + std::to_string(6 * m + 2));
  } else if (phi.poly.max_exponent() != 3 * m + 1) {
    r.fail("centered", "max exponent " + std::to_string(phi.poly.max_exponent()));
  }
  try {
    (void)divide_exact(phi.poly, sigma_power(2 * m + 1));
  } catch (const NonDivisible& e) {
    r.fail("divisibility", e.remainder());
  }
  return r;
}

RatLaurent phi_ode_residual(const PhiPolynomial& phi) {
  const RatLaurent d1 = euler_derivative(phi.poly);
  const RatLaurent d2 = euler_derivative(d1);
  const RatLaurent u6m1 = RatLaurent::monomial(6) - RatLaurent(Rational(1));
  const RatLaurent u6p1 = RatLaurent::monomial(6) + RatLaurent(Rational(1));
  const Rational mm(phi.m);
  const Rational k = (Rational(3) * mm + Rational(1)) * (Rational(3) * mm - Rational(1));
  return u6m1 * d2 - u6p1 * d1 * (Rational(6) * mm) + u6m1 * phi.poly * k;
}

VerificationReport check_phi_ode(const PhiPolynomial& phi) {
  return timed_check("phi_ode", param(phi.m), CheckMode::Exact, [&] {
    VerificationReport r;
    const auto res = phi_ode_residual(phi);
    r.passed = res.is_zero();
    r.add("residual", res.to_string());
    return r;
  });
}

CycloLaurent tq_residual(const XiPolynomial& xi, const std::optional<RatLaurent>& lambda) {
  const unsigned n = static_cast<unsigned>(2 * xi.m + 1);
  const CycloQ6 t = CycloQ6::tau();
  const CycloQ6 t_inv = t.inverse();
  const RatLaurent lam = lambda ? *lambda : sigma_power(static_cast<int>(n));
  const CycloLaurent lhs = lam * promote(xi.poly);
  const CycloLaurent rhs = pow(scale_variable(sigma(1), t), n) * scale_variable(xi.poly, t_inv * t_inv) +
                           pow(scale_variable(sigma(1), t_inv), n) * scale_variable(xi.poly, t * t);
  return lhs - rhs;
}

VerificationReport check_tq_identity(const XiPolynomial& xi, const std::optional<RatLaurent>& lambda) {
  return timed_check("scalar_tq_identity", param(xi.m), CheckMode::Exact, [&] {
    VerificationReport r;
    const auto res = tq_residual(xi, lambda);
    r.passed = res.is_zero();
    r.add("residual", res.to_string());
    return r;
  });
}

std::vector<Rational> chi_via_field(int m) {
  require_order(m);
  const ChiSystem sys = chi_system(m);
  // Rows: exponents -M..M; columns: c_r, the coefficient of z^{M-r}.
  std::vector<std::vector<CycloQ6>> a;
  std::vector<CycloQ6> b;
  for (long e = -m; e <= m; ++e) {
    std::vector<CycloQ6> row;
    for (const auto& p : sys.basis) row.push_back(p.coeff(e));
    a.push_back(std::move(row));
    b.push_back(sys.rhs.coeff(e));
  }
  const auto c = solve_unique(std::move(a), std::move(b));
  std::vector<Rational> ascending(static_cast<std::size_t>(m + 1));
  for (int r = 0; r <= m; ++r) {
    const CycloQ6& x = c[static_cast<std::size_t>(r)];
    if (!x.is_rational()) throw InvariantViolation("chi coefficient is not rational: " + x.to_string());
    ascending[static_cast<std::size_t>(m - r)] = x.a();
  }
  if (ascending.back() != Rational(1)) throw InvariantViolation("chi is not monic");
  return ascending;
}

VerificationReport verify_chi_candidate(int m, const std::vector<Rational>& chi) {
  return timed_check("chi_field_identity", param(m), CheckMode::Exact, [&] {
    VerificationReport r;
    if (static_cast<int>(chi.size()) != m + 1) {
      r.fail("degree", std::to_string(chi.size()) + " coefficients for degree " + std::to_string(m));
      return r;
    }
    const ChiSystem sys = chi_system(m);
    CycloLaurent lhs;
    for (int rr = 0; rr <= m; ++rr) {
      lhs += sys.basis[static_cast<std::size_t>(rr)] * CycloQ6(chi[static_cast<std::size_t>(m - rr)]);
    }
    const auto res = lhs - sys.rhs;
    r.passed = res.is_zero();
    r.add("residual", res.to_string());
    return r;
  });
}

std::size_t phi_solution_space_dimension(int m) {
  require_order(m);
  const RatLaurent s = sigma_power(2 * m + 1);
  const long top = 3L * m + 1;
  // phi_k = sum_j s_{k-j} q_j, j in [-M, M]; unknown index j + M.
  auto phi_coeff_row = [&](long k) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (long j = -m; j <= m; ++j) {
      const Rational c = s.coeff(k - j);
      if (!c.is_zero()) row.emplace_back(static_cast<std::size_t>(j + m), c);
    }
    return row;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (long k = -top; k <= top; ++k) {
    const bool parity_ok = ((k - (m + 1)) % 2) == 0;
    if (k % 3 == 0 || !parity_ok) rows.push_back(phi_coeff_row(k));
    if (k >= 0) {
      auto row = phi_coeff_row(k);
      for (auto& e : phi_coeff_row(-k)) row.push_back(e);
      rows.push_back(std::move(row));
    }
  }
  SparseRationalMatrix a(rows.size(), static_cast<std::size_t>(2 * m + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, c] : rows[i]) a.add(i, j, c);
  }
  return exact_nullspace(a).dimension();
}

}  // namespace tqasm
