#include "tqasm/laurent.hpp"

namespace tqasm {

RatLaurent sigma(long k) {
  if (k == 0) throw std::invalid_argument("sigma(u^0) is the zero polynomial");
  RatLaurent p;
  p.set(k, Rational(1));
  p.set(-k, Rational(-1));
  return p;
}

namespace detail {
std::string coeff_string(const Rational& c) { return c.to_string(); }
std::string coeff_string(const CycloQ6& c) { return c.to_string(); }
}  // namespace detail

}  // namespace tqasm
