#include "tqasm/cyclo.hpp"

#include <stdexcept>

#include "tqasm/errors.hpp"

namespace tqasm {

CycloQ6 CycloQ6::tau_pow(long k) {
  switch (((k % 6) + 6) % 6) {
    case 0: return CycloQ6(1);
    case 1: return CycloQ6(0, 1);
    case 2: return CycloQ6(-1, 1);
    case 3: return CycloQ6(-1);
    case 4: return CycloQ6(0, -1);
    default: return CycloQ6(1, -1);
  }
}

CycloQ6& CycloQ6::operator*=(const CycloQ6& o) {
  // (a + bt)(c + dt) = ac + (ad + bc) t + bd t^2,  t^2 = t - 1
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

CycloQ6 CycloQ6::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero("inverse of zero in Q(t)");
  const CycloQ6 c = conj();
  return CycloQ6(c.a() / n, c.b() / n);
}

std::string CycloQ6::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bt;
  if (b_ == Rational(1)) bt = "t";
  else if (b_ == Rational(-1)) bt = "-t";
  else bt = b_.to_string() + "*t";
  if (a_.is_zero()) return bt;
  if (b_.sign() > 0) return a_.to_string() + "+" + bt;
  return a_.to_string() + bt;
}

CycloQ6 CycloQ6::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty Q(t) literal");
  if (s.back() != 't') return CycloQ6(Rational::parse(s));

  // Split at the last sign that is not the leading one or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size() - 1; i > 0; --i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string a_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string b_part = split == std::string::npos ? s : s.substr(split);
  b_part.pop_back();  // drop 't'
  if (!b_part.empty() && b_part.back() == '*') b_part.pop_back();
  Rational b;
  if (b_part.empty() || b_part == "+") b = Rational(1);
  else if (b_part == "-") b = Rational(-1);
  else b = Rational::parse(b_part);
  Rational a = a_part.empty() ? Rational(0) : Rational::parse(a_part);
  return CycloQ6(std::move(a), std::move(b));
}

CycloQ6 cyclo_mul(const CycloQ6& x, const CycloQ6& y) { return x * y; }

CycloQ6 cyclo_inv(const CycloQ6& x) { return x.inverse(); }

CycloQ6 pow(const CycloQ6& x, long exponent) {
  if (exponent < 0) return pow(x.inverse(), -exponent);
  CycloQ6 result(1);
  CycloQ6 base = x;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1UL;
    if (e != 0) base *= base;
  }
  return result;
}

std::complex<double> cyclo_eval_numeric(const CycloQ6& x, int /*precision_bits*/) {
  return to_complex<double>(x);
}

}  // namespace tqasm
