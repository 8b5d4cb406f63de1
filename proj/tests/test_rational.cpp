#include "doctest.h"
#include "toyfriend/rational.hpp"

#include <map>
#include <stdexcept>

using toyfriend::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));

  Rational sum;
  for (int i = 0; i < 4; ++i) {
    sum += Rational(1, 4);
  }
  CHECK(sum == Rational(1));
}

TEST_CASE("comparisons order by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5, 4) > Rational(1));
}

TEST_CASE("division by zero and zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("values grow beyond 64 bits without loss") {
  // 1/2^100 by repeated halving, then back up.
  Rational tiny(1);
  for (int i = 0; i < 100; ++i) {
    tiny *= Rational(1, 2);
  }
  CHECK(tiny.str() == "1/1267650600228229401496703205376");
  CHECK_THROWS_AS(tiny.denominator_i64(), std::overflow_error);
  CHECK(tiny.numerator_i64() == 1);

  Rational restored = tiny;
  for (int i = 0; i < 100; ++i) {
    restored *= Rational(2);
  }
  CHECK(restored == Rational(1));

  // Summing 2^100 copies of tiny is exactly 1.
  Rational doubled = tiny;
  for (int i = 0; i < 100; ++i) {
    doubled += doubled;
  }
  CHECK(doubled == Rational(1));
}

TEST_CASE("to_double is close for representable values") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 4).to_double() == 0.25);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
