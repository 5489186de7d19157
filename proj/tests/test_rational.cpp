#include <doctest.h>

#include "ballquot/rational.hpp"

using namespace ballquot;

TEST_CASE("rational strings are lowest-terms p/q") {
  CHECK(rat_str(rat(1, 2)) == "1/2");
  CHECK(rat_str(rat(4, 8)) == "1/2");
  CHECK(rat_str(rat(7)) == "7");
  CHECK(rat_str(rat(-3, 6)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(rat(6, 3)) == "2");
}

TEST_CASE("parse_rat accepts p and p/q with whitespace") {
  CHECK(parse_rat("5/17") == rat(5, 17));
  CHECK(parse_rat("  25/93 ") == rat(25, 93));
  CHECK(parse_rat("-7") == rat(-7));
  CHECK(parse_rat("12/8") == rat(3, 2));
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("floor and fractional part handle negatives") {
  CHECK(rfloor(rat(7, 2)) == 3);
  CHECK(rfloor(rat(-7, 2)) == -4);
  CHECK(rfloor(rat(4)) == 4);
  CHECK(rfrac(rat(7, 2)) == rat(1, 2));
  CHECK(rfrac(rat(-7, 2)) == rat(1, 2));
  CHECK(rfrac(rat(3)) == 0);
}

TEST_CASE("to_int rejects non-integers") {
  CHECK(to_int(rat(10, 2)) == 5);
  CHECK(to_int(rat(-9, 3)) == -3);
  CHECK_THROWS_AS(to_int(rat(1, 2)), std::domain_error);
}
