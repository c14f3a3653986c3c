#include <doctest.h>

#include <cstdlib>
#include <string>

#include "bcov/errors.hpp"
#include "bcov/rational.hpp"

using namespace bcov;

TEST_SUITE("rational") {
  TEST_CASE("parse and format") {
    CHECK(to_fraction_string(parse_rational("2/5")) == "2/5");
    CHECK(to_fraction_string(parse_rational("4/10")) == "2/5");
    CHECK(to_fraction_string(parse_rational("0.4")) == "2/5");
    CHECK(to_fraction_string(parse_rational("-1.25e-3")) == "-1/800");
    CHECK(to_fraction_string(parse_rational("3")) == "3/1");
    CHECK(to_fraction_string(parse_rational("1e2")) == "100/1");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
  }

  TEST_CASE("malformed input is a domain error") {
    for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.2.3", "1e", "nan", "1/2/3"})
      CHECK_THROWS_AS(parse_rational(bad), DomainError);
  }

  TEST_CASE("lists") {
    auto v = parse_rational_list("1,2/3,0.5");
    REQUIRE(v.size() == 3);
    CHECK(v[1] == make_rational(2, 3));
    CHECK(v[2] == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational_list("1,,2"), DomainError);
  }

  TEST_CASE("to_double rounds to nearest") {
    // strtod is correctly rounded on glibc; compare on decimal expansions
    for (const char* text : {"0.04", "0.1", "0.3", "2.0800000000000000001", "175e-5", "1e-300", "123456789.123456789"})
      CHECK(to_double(parse_rational(text)) == std::strtod(text, nullptr));
    CHECK(to_double(make_rational(1, 25)) == 0.04);
    CHECK(to_double(make_rational(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(make_rational(-2, 3)) == -2.0 / 3.0);
    CHECK(to_double(Rational(0)) == 0.0);
    // halfway between 1 and 1 + 2^-52 rounds to even
    Rational half = 1 + Rational(1) / (Rational(Integer(1) << 53));
    CHECK(to_double(half) == 1.0);
  }

  TEST_CASE("from_double is exact") {
    for (double x : {0.1, -3.75, 1e-310, 12345.678}) CHECK(to_double(from_double(x)) == x);
    CHECK(from_double(0.5) == make_rational(1, 2));
  }

  TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow(make_rational(2, 3), 0) == 1);
    CHECK(floor(make_rational(7, 2)) == 3);
    CHECK(floor(make_rational(-7, 2)) == -4);
  }
}
