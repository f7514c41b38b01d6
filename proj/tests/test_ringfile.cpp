#include <doctest.h>

#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;

TEST_CASE("ring files") {
  auto cp = parse_ring_file("field QQ\nvars X Y\nquotient X^2, X*Y\n");
  CHECK(cp.ring->names() == std::vector<std::string>{"X", "Y"});
  CHECK(strings(cp.quotient) == std::vector<std::string>{"X^2", "X*Y"});

  auto fat = parse_ring_file("vars X Y Z\nquotient X^3, X*Y, Y^2 - X*Z\n");
  CHECK(fat.ring->field().is_rational());
  CHECK(fat.quotient.size() == 3);

  auto semi = parse_ring_file(
      "# numerical semigroup ring\nfield FP 32003\nvars X1 X2 X3\nweights 3 4 5\n"
      "quotient X1*X3 - X2^2,\n  X1^3 - X2*X3\nideal Q = X1\n");
  CHECK(semi.ring->field() == Field::prime(32003));
  CHECK(semi.quotient.size() == 2);
  REQUIRE(semi.find("Q"));
  CHECK(semi.find("Q")->gens.size() == 1);
}

TEST_CASE("ring file errors carry positions") {
  CHECK_THROWS_AS(parse_ring_file("vars X\nweights 0\n"), ParseError);
  try {
    parse_ring_file("vars X Y\nquotient X^2 + Z\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_AS(parse_ring_file("field FP 32001\nvars X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X Y\nweights 1\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("quotient X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X\nideal X = X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X\nquotient 2X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X\nquotient X/X\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars X\nfoo X\n"), ParseError);
}

TEST_CASE("polynomial grammar") {
  auto R = make_ring({"X", "Y"});
  CHECK(P(R, "-X^2") == -(P(R, "X") * P(R, "X")));
  CHECK(P(R, "(X + Y)^2") == P(R, "X^2 + 2*X*Y + Y^2"));
  CHECK(P(R, "3/2*X - X/2") == P(R, "X"));
  CHECK(P(R, "2*(X - (Y - 1))") == P(R, "2*X - 2*Y + 2"));
  CHECK(P(R, "X - -Y") == P(R, "X + Y"));
  CHECK(parse_polynomial_list(R, "").empty());
  CHECK_THROWS_AS(P(R, "X +"), ParseError);
  CHECK_THROWS_AS(P(R, "X ^ Y"), ParseError);
  CHECK_THROWS_AS(P(R, "(X"), ParseError);
}

TEST_CASE("print and parse round trip") {
  std::vector<std::string> files = {
      "field QQ\nvars X Y\nquotient X^2, X*Y\nideal Q = Y^3\nideal I = X, Y^2\n",
      "field FP 32003\nvars X1 X2 X3\nweights 3 4 5\nquotient X1*X3 - X2^2, 16001*X1^3 - 7*X2*X3\n",
      "vars a b c\nideal J = 1/3*a - 2/5*b*c, -a^2\n",
  };
  for (const auto& text : files) {
    auto f = parse_ring_file(text);
    auto printed = print_ring_file(f);
    auto g = parse_ring_file(printed);
    CHECK(structurally_equal(f, g));
    CHECK(print_ring_file(g) == printed);
  }
}
