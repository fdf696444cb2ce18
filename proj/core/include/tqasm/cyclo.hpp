#ifndef TQASM_CYCLO_HPP
#define TQASM_CYCLO_HPP

#include <cmath>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "tqasm/rational.hpp"

namespace tqasm {

/// Element a + b*t of the quadratic field Q(t), t = exp(i*pi/3).
///
/// The minimal polynomial of t is t^2 - t + 1, so products reduce with
/// t^2 -> t - 1. Consequences used throughout: t^3 = -1, t^6 = 1,
/// t^-1 = 1 - t (the complex conjugate of t).
class CycloQ6 {
 public:
  CycloQ6() = default;
  CycloQ6(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  CycloQ6(int a) : a_(a) {}                  // NOLINT
  CycloQ6(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycloQ6 tau() { return CycloQ6(Rational(0), Rational(1)); }
  /// t^k for any integer k, via k mod 6.
  static CycloQ6 tau_pow(long k);

  /// Parses "a+b*t", "a-b*t", "b*t", "t", "-t" or a bare rational "a".
  static CycloQ6 parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True when the element lies in Q (its imaginary part vanishes).
  bool is_rational() const { return b_.is_zero(); }

  /// Galois conjugate t -> t^-1 = 1 - t, which is complex conjugation.
  CycloQ6 conj() const { return CycloQ6(a_ + b_, -b_); }
  /// Field norm x * conj(x) = a^2 + ab + b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

  CycloQ6 inverse() const;
  std::string to_string() const;

  CycloQ6 operator-() const { return CycloQ6(-a_, -b_); }
  CycloQ6& operator+=(const CycloQ6& o) { a_ += o.a_; b_ += o.b_; return *this; }
  CycloQ6& operator-=(const CycloQ6& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  CycloQ6& operator*=(const CycloQ6& o);
  CycloQ6& operator/=(const CycloQ6& o) { return *this *= o.inverse(); }

  friend CycloQ6 operator+(CycloQ6 x, const CycloQ6& y) { return x += y; }
  friend CycloQ6 operator-(CycloQ6 x, const CycloQ6& y) { return x -= y; }
  friend CycloQ6 operator*(CycloQ6 x, const CycloQ6& y) { return x *= y; }
  friend CycloQ6 operator/(CycloQ6 x, const CycloQ6& y) { return x /= y; }
  friend bool operator==(const CycloQ6& x, const CycloQ6& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  friend std::ostream& operator<<(std::ostream& os, const CycloQ6& x) { return os << x.to_string(); }

 private:
  Rational a_;
  Rational b_;
};

CycloQ6 cyclo_mul(const CycloQ6& x, const CycloQ6& y);
CycloQ6 cyclo_inv(const CycloQ6& x);
CycloQ6 pow(const CycloQ6& x, long exponent);

/// Numeric image of x under t -> exp(i*pi/3).
template <class Real>
std::complex<Real> to_complex(const CycloQ6& x) {
  using std::sqrt;
  const Real half = Real(1) / Real(2);
  const Real s3h = sqrt(Real(3)) / Real(2);
  const Real a = to_real<Real>(x.a());
  const Real b = to_real<Real>(x.b());
  return {a + b * half, b * s3h};
}

/// Double-precision embedding; `precision_bits` above 53 is accepted but
/// capped, use to_complex<Real> with a wider type for more digits.
std::complex<double> cyclo_eval_numeric(const CycloQ6& x, int precision_bits = 53);

}  // namespace tqasm

#endif  // TQASM_CYCLO_HPP
