#ifndef TQASM_LAURENT_HPP
#define TQASM_LAURENT_HPP

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tqasm/cyclo.hpp"
#include "tqasm/errors.hpp"
#include "tqasm/rational.hpp"

namespace tqasm {

/// Sparse Laurent polynomial sum_k c_k u^k, k ranging over all integers.
///
/// Coeff is Rational or CycloQ6. Zero coefficients are never stored, so the
/// zero polynomial is the empty map.
template <class Coeff>
class LaurentPoly {
 public:
  using coeff_type = Coeff;
  using Terms = std::map<long, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff c) { set(0, std::move(c)); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(long k, Coeff c = Coeff(1)) {
    LaurentPoly p;
    p.set(k, std::move(c));
    return p;
  }

  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(const std::vector<std::pair<long, Coeff>>& terms) {
    LaurentPoly p;
    for (const auto& [k, c] : terms) p.add_term(k, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void set(long k, Coeff c) {
    if (c.is_zero()) terms_.erase(k);
    else terms_[k] = std::move(c);
  }

  void add_term(long k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  long max_exponent() const { require_nonzero(); return terms_.rbegin()->first; }
  long min_exponent() const { require_nonzero(); return terms_.begin()->first; }

  /// Largest |k| over nonzero terms; 0 for the zero polynomial.
  long degree() const {
    if (is_zero()) return 0;
    return std::max(std::labs(min_exponent()), std::labs(max_exponent()));
  }

  /// Width of the exponent range, max - min. This is the degree of the
  /// ordinary polynomial u^{-min} p(u).
  long span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  const Coeff& leading_coeff() const { require_nonzero(); return terms_.rbegin()->second; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Coeff& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Coeff& s) { return a *= s; }
  friend LaurentPoly operator*(const Coeff& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [i, x] : a.terms_) {
      for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// "c_k*u^k + ..." in decreasing exponent order; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = it->second.to_string();
      const bool compound = c.find_first_of("+-", 1) != std::string::npos;
      if (compound) c = "(" + c + ")";
      std::string term = it->first == 0 ? c : c + "*u^" + std::to_string(it->first);
      if (first) {
        out = term;
        first = false;
      } else if (!compound && term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  void require_nonzero() const {
    if (is_zero()) throw std::domain_error("exponent query on the zero Laurent polynomial");
  }

  Terms terms_;
};

using RatLaurent = LaurentPoly<Rational>;
using CycloLaurent = LaurentPoly<CycloQ6>;

/// Rational -> Q(t) coefficient promotion.
inline CycloLaurent promote(const RatLaurent& p) {
  CycloLaurent r;
  for (const auto& [k, c] : p.terms()) r.set(k, CycloQ6(c));
  return r;
}
inline CycloLaurent promote(const CycloLaurent& p) { return p; }

inline CycloLaurent operator*(const RatLaurent& a, const CycloLaurent& b) { return promote(a) * b; }
inline CycloLaurent operator*(const CycloLaurent& a, const RatLaurent& b) { return a * promote(b); }
inline CycloLaurent operator+(const RatLaurent& a, const CycloLaurent& b) { return promote(a) + b; }
inline CycloLaurent operator+(const CycloLaurent& a, const RatLaurent& b) { return a + promote(b); }
inline CycloLaurent operator-(const RatLaurent& a, const CycloLaurent& b) { return promote(a) - b; }
inline CycloLaurent operator-(const CycloLaurent& a, const RatLaurent& b) { return a - promote(b); }

/// sigma(u^k) = u^k - u^-k. k = 0 would be the zero polynomial and is rejected.
RatLaurent sigma(long k);

template <class Coeff>
LaurentPoly<Coeff> pow(const LaurentPoly<Coeff>& p, unsigned n) {
  LaurentPoly<Coeff> result(Coeff(1));
  LaurentPoly<Coeff> base = p;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

/// p(c*u): coefficient at exponent k is multiplied by c^k.
template <class Coeff>
CycloLaurent scale_variable(const LaurentPoly<Coeff>& p, const CycloQ6& c) {
  if (c.is_zero()) throw std::invalid_argument("scale_variable: zero scale");
  const CycloQ6 c_inv = c.inverse();
  CycloLaurent r;
  for (const auto& [k, x] : p.terms()) {
    r.set(k, CycloQ6(x) * (k >= 0 ? pow(c, k) : pow(c_inv, -k)));
  }
  return r;
}

/// p(c*u) for a rational scale, staying in the coefficient domain of p.
template <class Coeff>
LaurentPoly<Coeff> scale_variable_rational(const LaurentPoly<Coeff>& p, const Rational& c) {
  if (c.is_zero()) throw std::invalid_argument("scale_variable: zero scale");
  LaurentPoly<Coeff> r;
  for (const auto& [k, x] : p.terms()) r.set(k, x * Coeff(pow(c, static_cast<int>(k))));
  return r;
}

/// p(1/u): exponent k -> -k.
template <class Coeff>
LaurentPoly<Coeff> invert_variable(const LaurentPoly<Coeff>& p) {
  LaurentPoly<Coeff> r;
  for (const auto& [k, c] : p.terms()) r.set(-k, c);
  return r;
}

/// u d/du: coefficient at exponent k multiplied by k.
template <class Coeff>
LaurentPoly<Coeff> euler_derivative(const LaurentPoly<Coeff>& p) {
  LaurentPoly<Coeff> r;
  for (const auto& [k, c] : p.terms()) r.set(k, c * Coeff(Rational(k)));
  return r;
}

/// Exact quotient q with q * den == num. Works from the highest exponent
/// downward as in ordinary long division; throws NonDivisible with the
/// remainder when no Laurent quotient exists.
template <class Coeff>
LaurentPoly<Coeff> divide_exact(const LaurentPoly<Coeff>& num, const LaurentPoly<Coeff>& den) {
  if (den.is_zero()) throw DivisionByZero("divide_exact: zero divisor");
  if (num.is_zero()) return {};
  const long den_hi = den.max_exponent();
  const long den_lo = den.min_exponent();
  const Coeff lead = den.leading_coeff();
  // Any exact quotient has exponents >= num_lo - den_lo.
  const long q_floor = num.min_exponent() - den_lo;

  LaurentPoly<Coeff> rem = num;
  LaurentPoly<Coeff> quot;
  while (!rem.is_zero() && rem.max_exponent() - den_hi >= q_floor) {
    const long k = rem.max_exponent() - den_hi;
    const Coeff c = rem.leading_coeff() / lead;
    quot.set(k, c);
    for (const auto& [e, d] : den.terms()) rem.add_term(e + k, -(c * d));
  }
  if (!rem.is_zero()) throw NonDivisible("divide_exact", rem.to_string());
  return quot;
}

/// Exact evaluation at a nonzero point of the coefficient field.
template <class Coeff, class Point>
Point evaluate(const LaurentPoly<Coeff>& p, const Point& x) {
  if (x.is_zero()) throw DivisionByZero("Laurent evaluation at zero");
  const Point x_inv = Point(1) / x;
  auto power = [](Point base, unsigned long e) {
    Point r(1);
    while (e != 0) {
      if (e & 1UL) r *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return r;
  };
  Point sum(0);
  for (const auto& [k, c] : p.terms()) {
    sum += Point(c) * (k >= 0 ? power(x, static_cast<unsigned long>(k)) : power(x_inv, static_cast<unsigned long>(-k)));
  }
  return sum;
}

/// Numeric evaluation: positive and negative parts by Horner in u and 1/u.
template <class Coeff, class Real = double>
std::complex<Real> eval_numeric(const LaurentPoly<Coeff>& p, const std::complex<Real>& u) {
  if (u == std::complex<Real>(0)) throw DivisionByZero("Laurent evaluation at u = 0");
  if (p.is_zero()) return {};
  auto coeff_at = [&](long k) -> std::complex<Real> {
    auto it = p.terms().find(k);
    if (it == p.terms().end()) return {};
    if constexpr (std::is_same_v<Coeff, Rational>) return {to_real<Real>(it->second), Real(0)};
    else return to_complex<Real>(it->second);
  };
  std::complex<Real> pos{};
  for (long k = std::max(0L, p.max_exponent()); k >= 0; --k) pos = pos * u + coeff_at(k);
  std::complex<Real> neg{};
  const std::complex<Real> w = Real(1) / u;
  for (long k = std::min(-1L, p.min_exponent()); k <= -1; ++k) neg = neg * w + coeff_at(k);
  return pos + neg * w;
}

namespace detail {
std::string coeff_string(const Rational& c);
std::string coeff_string(const CycloQ6& c);
}  // namespace detail

/// [[exponent, "coefficient"], ...] in decreasing exponent order.
template <class Coeff>
std::vector<std::pair<long, std::string>> to_pairs(const LaurentPoly<Coeff>& p) {
  std::vector<std::pair<long, std::string>> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.emplace_back(it->first, detail::coeff_string(it->second));
  }
  return out;
}

}  // namespace tqasm

#endif  // TQASM_LAURENT_HPP
