#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "support/random_values.hpp"
#include "tqasm/cyclo.hpp"
#include "tqasm/errors.hpp"
#include "tqasm/rational.hpp"

using namespace tqasm;
using tqasm::testing::kSeed;
using tqasm::testing::kTrials;

namespace {

const CycloQ6 t = CycloQ6::tau();

std::complex<double> exact_tau() { return std::polar(1.0, std::acos(-1.0) / 3.0); }

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("-2.5e-1") == Rational(-1, 4));
  CHECK(Rational::parse("12e2") == Rational(1200));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational division by zero signals") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(CycloQ6(0).inverse(), DivisionByZero);
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(Rational(2, 3), 1) == Rational(2, 3));
  CHECK(binomial(Rational(4, 3), 1) == Rational(4, 3));
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("tau minimal polynomial and powers") {
  CHECK(t * t == t - CycloQ6(1));
  CHECK(pow(t, 3) == CycloQ6(-1));
  CHECK(pow(t, 6) == CycloQ6(1));
  CHECK(t * (CycloQ6(1) - t) == CycloQ6(1));
  CHECK(t + t.inverse() == CycloQ6(1));
  for (long k = -12; k <= 12; ++k) CHECK(CycloQ6::tau_pow(k) == pow(t, k));
}

TEST_CASE("cyclo inverse examples") {
  CHECK(cyclo_inv(t) == CycloQ6(1) - t);
  CHECK(cyclo_inv(CycloQ6(1)) == CycloQ6(1));
  CHECK(cyclo_inv(t * t) == -t);
  CHECK(cyclo_mul(t, t) == CycloQ6(-1, 1));
}

TEST_CASE("cyclo parse and print round trip") {
  CHECK(CycloQ6::parse("t") == t);
  CHECK(CycloQ6::parse("-1+t") == t - CycloQ6(1));
  CHECK(CycloQ6::parse("1/2-3/4*t") == CycloQ6(Rational(1, 2), Rational(-3, 4)));
  std::mt19937 rng(kSeed);
  for (int i = 0; i < kTrials; ++i) {
    const CycloQ6 x = testing::random_cyclo(rng);
    CHECK(CycloQ6::parse(x.to_string()) == x);
  }
}

TEST_CASE("numeric embedding values") {
  const auto tz = cyclo_eval_numeric(t);
  CHECK(std::abs(tz - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-15);
  CHECK(std::abs(cyclo_eval_numeric(t + t.inverse()) - std::complex<double>(1.0, 0.0)) < 1e-15);
  const CycloQ6 delta = (pow(t, 2) + pow(t, -2)) * CycloQ6(Rational(1, 2));
  CHECK(delta == CycloQ6(Rational(-1, 2)));
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(kSeed);
  for (int i = 0; i < kTrials; ++i) {
    const CycloQ6 x = testing::random_cyclo(rng);
    const CycloQ6 y = testing::random_cyclo(rng);
    const CycloQ6 z = testing::random_cyclo(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == CycloQ6(0));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == CycloQ6(1));
      CHECK(x.norm() > Rational(0));
    }
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x * x.conj() == CycloQ6(x.norm()));
  }
}

TEST_CASE("numeric embedding is a ring homomorphism") {
  std::mt19937 rng(kSeed + 1);
  for (int i = 0; i < kTrials; ++i) {
    const CycloQ6 x = testing::random_cyclo(rng);
    const CycloQ6 y = testing::random_cyclo(rng);
    const auto ex = cyclo_eval_numeric(x);
    const auto ey = cyclo_eval_numeric(y);
    const double scale = 1.0 + std::abs(ex) * std::abs(ey);
    CHECK(std::abs(cyclo_eval_numeric(x * y) - ex * ey) < 1e-12 * scale);
    CHECK(std::abs(cyclo_eval_numeric(x + y) - (ex + ey)) < 1e-12 * (1.0 + std::abs(ex) + std::abs(ey)));
    // independent route: a + b e^{i pi/3}
    const auto direct = x.a().to_double() + x.b().to_double() * exact_tau();
    CHECK(std::abs(direct - ex) < 1e-12 * (1.0 + std::abs(ex)));
  }
}

TEST_CASE("rational ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(to_real<long double>(Rational(1, 4)) == 0.25L);
}
