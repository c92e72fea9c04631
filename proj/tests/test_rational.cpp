#include <doctest.h>

#include "resovar/rational.hpp"

using namespace resovar;

TEST_CASE("rational parsing accepts p and p/q and canonicalizes") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-7") == Rational(-7));
  CHECK(*parse_rational("2/4") == Rational(1, 2));
  CHECK(*parse_rational("-5/10") == Rational(-1, 2));
  CHECK(*parse_rational("3/-6") == Rational(-1, 2));  // sign moves to the numerator
  CHECK(*parse_rational("0/9") == Rational(0));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("abc").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK_FALSE(parse_rational("1/2/3").has_value());
  CHECK_FALSE(parse_rational("+3").has_value());
  CHECK_FALSE(parse_rational("1/").has_value());
  CHECK_FALSE(parse_rational("/2").has_value());
  CHECK_FALSE(parse_rational(" 1").has_value());
}

TEST_CASE("format round-trips through parse") {
  for (const char* s : {"0", "1", "-1", "22/7", "-355/113"}) {
    Rational v = *parse_rational(s);
    CHECK(format_rational(v) == s);
  }
}

TEST_CASE("denominators stay positive and reduced under arithmetic") {
  Rational a(1, 3), b(1, 6);
  Rational c = a + b;
  CHECK(c == Rational(1, 2));
  CHECK(c.get_den() == 2);
  Rational d = Rational(2, 3) / Rational(-4, 9);
  CHECK(d == Rational(-3, 2));
  CHECK(sgn(d.get_den()) > 0);
}
