#ifndef TQASM_RATIONAL_HPP
#define TQASM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace tqasm {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& v) : q_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p", "p/q", and decimal forms such as "-1.25" or "3.5e-2".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);

/// Generalized binomial coefficient binom(x, k) = x (x-1) ... (x-k+1) / k!.
Rational binomial(const Rational& x, int k);

/// Conversion to a floating type. Works for builtin floating point and for
/// boost::multiprecision floats constructible from decimal strings.
template <class Real>
Real to_real(const Rational& r) {
  if constexpr (std::is_same_v<Real, double> || std::is_same_v<Real, float>) {
    return static_cast<Real>(r.to_double());
  } else if constexpr (std::is_floating_point_v<Real>) {
    return std::stold(r.num().get_str()) / std::stold(r.den().get_str());
  } else {
    return Real(r.num().get_str()) / Real(r.den().get_str());
  }
}

}  // namespace tqasm

#endif  // TQASM_RATIONAL_HPP
