// Seeded generators for the property tests.
#ifndef TQASM_TESTS_RANDOM_VALUES_HPP
#define TQASM_TESTS_RANDOM_VALUES_HPP

#include <random>

#include "tqasm/cyclo.hpp"
#include "tqasm/laurent.hpp"
#include "tqasm/rational.hpp"

namespace tqasm::testing {

inline constexpr std::uint32_t kSeed = 20061u;
inline constexpr int kTrials = 200;

inline Rational random_rational(std::mt19937& rng, long bound = 40) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  Rational r;
  do r = random_rational(rng);
  while (r.is_zero());
  return r;
}

inline CycloQ6 random_cyclo(std::mt19937& rng) { return CycloQ6(random_rational(rng), random_rational(rng)); }

inline CycloQ6 random_nonzero_cyclo(std::mt19937& rng) {
  CycloQ6 x;
  do x = random_cyclo(rng);
  while (x.is_zero());
  return x;
}

inline RatLaurent random_rat_laurent(std::mt19937& rng, long max_abs_exponent = 6, int max_terms = 5) {
  std::uniform_int_distribution<long> exp(-max_abs_exponent, max_abs_exponent);
  std::uniform_int_distribution<int> terms(1, max_terms);
  RatLaurent p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) p.add_term(exp(rng), random_rational(rng, 9));
  return p;
}

inline CycloLaurent random_cyclo_laurent(std::mt19937& rng, long max_abs_exponent = 6, int max_terms = 5) {
  std::uniform_int_distribution<long> exp(-max_abs_exponent, max_abs_exponent);
  std::uniform_int_distribution<int> terms(1, max_terms);
  CycloLaurent p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) p.add_term(exp(rng), CycloQ6(random_rational(rng, 9), random_rational(rng, 9)));
  return p;
}

}  // namespace tqasm::testing

#endif
