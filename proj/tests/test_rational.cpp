#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "homometry/rational.hpp"

using homometry::Rat;

TEST_CASE("rationals are stored in lowest terms") {
  const Rat r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rat(3).str() == "3/1");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(Rat(-1, 3) < Rat(-1, 4));
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(4).floor() == 4);
}

TEST_CASE("parsing") {
  CHECK(Rat::parse("3/8") == Rat(3, 8));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("-1.5") == Rat(-3, 2));
  CHECK(Rat::parse(" 2/4 ") == Rat(1, 2));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("rational gcd, lcm and mod") {
  CHECK(gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
  CHECK(lcm(Rat(1, 2), Rat(1, 3)) == Rat(1));
  CHECK(lcm(Rat(3, 4), Rat(1, 2)) == Rat(3, 2));
  CHECK(gcd(Rat(3, 4), Rat(1, 2)) == Rat(1, 4));
  CHECK(mod(Rat(-1, 4), Rat(1)) == Rat(3, 4));
  CHECK(mod(Rat(9, 4), Rat(1, 2)) == Rat(1, 4));
  CHECK(homometry::exact_quotient(Rat(3, 2), Rat(1, 4)) == 6);
  CHECK_THROWS_AS(homometry::exact_quotient(Rat(1, 3), Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rat big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rat(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rat(2), std::overflow_error);
}
