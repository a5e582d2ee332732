#include <doctest.h>

#include "invkit/error.hpp"
#include "invkit/rational.hpp"

using namespace invkit;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  const Rational r(Int(6), Int(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0).num() == 0);
  CHECK(Rational(0).den() == 1);
  CHECK((Rational(1, 3) + Rational(2, 3)).is_integer());
  CHECK(gcd(abs(Rational(-3, 2).num()), Rational(-3, 2).den()) == 1);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), ValidationError);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), ValidationError);
}

TEST_CASE("rational text round-trips") {
  for (const char* s : {"0", "1", "-7", "1/2", "-22/7", "123456789123456789/2"}) {
    const Rational r = Rational::parse(s);
    CHECK(r.str() == s);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK_THROWS_AS(Rational::parse(""), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("a"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ValidationError);
}

TEST_CASE("bit length") {
  CHECK(bit_length(Int(0)) == 0);
  CHECK(bit_length(Int(1)) == 1);
  CHECK(bit_length(Int(-8)) == 4);
  CHECK(bit_length(Int(255)) == 8);
  CHECK(bit_length(Int(256)) == 9);
}

TEST_CASE("matrix arithmetic over the rational scalar") {
  MatrixQ a(2, 2);
  a << Rational(1, 2), Rational(2), Rational(0), Rational(1);
  MatrixQ b(2, 2);
  b << Rational(1), Rational(1, 3), Rational(5), Rational(-1);
  const MatrixQ c = a * b;
  CHECK(c(0, 0) == Rational(21, 2));
  CHECK(c(0, 1) == Rational(-11, 6));
  CHECK(c(1, 0) == Rational(5));
  CHECK(c(1, 1) == Rational(-1));
}
