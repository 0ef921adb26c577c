#include <doctest.h>

#include "qgl1/errors.hpp"
#include "qgl1/rational.hpp"

using namespace qgl1;

TEST_SUITE("rational") {

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(-1, -2)) == "1/2");
  CHECK(to_string(make_rational(1, -2)) == "-1/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parse accepts the exact grammar") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(to_string(parse_rational("123456789012345678901234567890/2")) ==
        "61728394506172839450617283945");
}

TEST_CASE("parse rejects everything else") {
  for (const char* bad : {"", "+1", "1/", "/2", "1/0", "1.5", " 1", "1 ", "a",
                          "-", "1/-2", "1//2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  try {
    parse_rational("1/0");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == "ZeroDenominator");
  }
}

TEST_CASE("arithmetic is exact and stays canonical") {
  Rational a = parse_rational("1/3");
  Rational b = parse_rational("1/6");
  CHECK(a + b == make_rational(1, 2));
  CHECK(a - b == make_rational(1, 6));
  CHECK(a * b == make_rational(1, 18));
  CHECK(a / b == 2);
  CHECK(is_canonical(a + b));
  CHECK(is_canonical(a * b));
  CHECK(is_canonical(Rational(abs(parse_rational("-7/3")))));
}

TEST_CASE("to_string round-trips") {
  for (const char* text : {"0", "1", "-1", "1/2", "-355/113", "1000000007"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
}

}  // TEST_SUITE
