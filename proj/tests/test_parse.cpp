#include "betti4/errors.hpp"
#include "betti4/parse.hpp"
#include "doctest.h"

using namespace betti4;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_ideal(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("grammar") {
  const auto m = parse_ideal("x1^2*x2^2, x1^2*x2*x3, x2*x3*x4^2, x3^2*x4^2");
  REQUIRE(m.size() == 4);
  CHECK(m.to_string() == "x3^2*x4^2, x2*x3*x4^2, x1^2*x2*x3, x1^2*x2^2");

  CHECK(parse_ideal("  x1 ^ 3 *x4 ,x2") == parse_ideal("x1^3*x4, x2"));
  CHECK(parse_ideal("a*b^2, c, d") == parse_ideal("x1*x2^2, x3, x4"));
  CHECK(parse_monomial("x1*x1*x1^2") == Monomial(4, 0, 0, 0));
  CHECK(parse_monomial("x4*x2") == Monomial(0, 1, 0, 1));
}

TEST_CASE("minimalization happens during parsing") {
  CHECK(parse_ideal("x1, x1*x2, x1^2").size() == 1);
  CHECK(parse_ideal("x1*x2, x1*x2").size() == 1);
  CHECK(parse_ideal("x2, 1").is_unit());
}

TEST_CASE("empty input and comments") {
  CHECK(parse_ideal("").is_zero());
  CHECK(parse_ideal("   # nothing here").is_zero());
  CHECK(parse_ideal("x1, x2 # trailing note").size() == 2);
  CHECK(is_blank_line("  "));
  CHECK(is_blank_line("# comment"));
  CHECK_FALSE(is_blank_line(" x1"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK(error_position("x1,,x2") == 3);
  CHECK(error_position("x1 x2") == 3);
  CHECK(error_position("x1^") == 3);
  CHECK(error_position("x1^0") == 3);
  CHECK(error_position("y1") == 0);
  CHECK(error_position("x1,") == 3);
  CHECK(error_position("1*x2") == 0);
  CHECK(error_position("x") == 1);
  CHECK_THROWS_AS(parse_monomial("x1, x2"), ParseError);
}

TEST_CASE("range and cap errors") {
  CHECK_THROWS_AS(parse_ideal("x0"), VariableOutOfRange);
  CHECK_THROWS_AS(parse_ideal("x1*x5"), VariableOutOfRange);
  CHECK_THROWS_AS(parse_ideal("x12"), VariableOutOfRange);
  CHECK_THROWS_AS(parse_ideal("x1^65"), ExponentCapExceeded);
  CHECK_THROWS_AS(parse_ideal("x1^40*x1^40"), ExponentCapExceeded);
  CHECK_THROWS_AS(parse_ideal("x1^99999999999999"), ExponentCapExceeded);
  CHECK(parse_ideal("x1^65", 100).size() == 1);
  CHECK_THROWS_AS(parse_ideal("x2^3", 2), ExponentCapExceeded);
}
