#include <doctest.h>

#include "socle/ideal_ops.hpp"
#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;

TEST_CASE("sums, products, powers") {
  auto R = make_ring({"X", "Y"});
  CHECK(strings(power(ideal(R, "X, Y"), 2).gens()) == std::vector<std::string>{"X^2", "X*Y", "Y^2"});
  CHECK(power(ideal(R, "X, Y"), 0).is_unit());
  auto qi = sum(product(ideal(R, "Y^3"), ideal(R, "X, Y^2")), ideal(R, "X^2, X*Y"));
  CHECK(strings(product(ideal(R, "Y^3"), ideal(R, "X, Y^2")).gens()) == std::vector<std::string>{"X*Y^3", "Y^5"});
  CHECK(equal_as_S_ideals(qi, ideal(R, "X^2, X*Y, Y^5")));
  CHECK(power(ideal(R, "X, Y, X + Y"), 3).size() == 10);  // multisets, before any cancellation
}

TEST_CASE("intersections") {
  auto R = make_ring({"X", "Y", "Z", "W"});
  CHECK(equal_as_S_ideals(intersect(ideal(R, "X^2"), ideal(R, "Y, Z")), ideal(R, "X^2*Y, X^2*Z")));
  CHECK(equal_as_S_ideals(intersect(ideal(R, "X, Y"), ideal(R, "Z, W")), ideal(R, "X*Z, X*W, Y*Z, Y*W")));
  auto J = ideal(R, "X^2 - Y*Z, X*W + Y");
  CHECK(equal_as_S_ideals(intersect(J, J), J));
  for (int l = 1; l <= 3; ++l) {
    std::string xl = "X^" + std::to_string(l);
    CHECK(equal_as_S_ideals(intersect(ideal(R, xl), ideal(R, "Y, Z")), ideal(R, xl + "*Y, " + xl + "*Z")));
  }
  CHECK(intersect(J, Ideal(R)).is_zero());
}

TEST_CASE("colons and saturation") {
  auto R = make_ring({"X", "Y"});
  for (int n = 2; n <= 5; ++n) {
    auto c = colon(ideal(R, "X^" + std::to_string(n)), ideal(R, "X"));
    CHECK(equal_as_S_ideals(c, ideal(R, "X^" + std::to_string(n - 1))));
  }
  auto I = colon(ideal(R, "Y^3, X^2, X*Y"), ideal(R, "X, Y"));
  CHECK(equal_as_S_ideals(I, ideal(R, "X, Y^2")));
  CHECK(colon(ideal(R, "X"), ideal(R, "X, 1 + Y")).contains(P(R, "X")));
  CHECK_THROWS_AS(colon(ideal(R, "X"), Ideal(R)), InputError);
  CHECK(equal_as_S_ideals(colon(ideal(R, "X^2, X*Y"), Ideal::unit(R)), ideal(R, "X^2, X*Y")));

  auto s = saturate(ideal(R, "X^2, X*Y"), ideal(R, "X, Y"));
  CHECK(equal_as_S_ideals(s.ideal, ideal(R, "X")));
  CHECK(s.exponent == 1);

  auto T = make_ring({"X", "Y", "Z"});
  auto a = ideal(T, "X^3, X*Y, Y^2 - X*Z");
  auto sat = saturate(a, maximal_ideal(T));
  CHECK(equal_as_S_ideals(sat.ideal, sum(a, ideal(T, "X^2"))));
  CHECK(saturate(ideal(T, "X*Y - Z^2"), maximal_ideal(T)).exponent == 0);
}

TEST_CASE("S-level equality") {
  auto R = make_ring({"X", "Y", "Z"});
  CHECK(equal_as_S_ideals(ideal(R, "X, Y"), ideal(R, "Y, X + Y")));
  CHECK_FALSE(equal_as_S_ideals(ideal(R, "X"), ideal(R, "X^2")));
  CHECK(equal_as_S_ideals(ideal(R, "X, Y"), ideal(R, "Y, X + Y"), MonomialOrder::lex()));
  CHECK(equal_as_S_ideals(ideal(R, "X^3*Y, X^3*Z"), intersect(ideal(R, "X^3"), ideal(R, "Y, Z"))));
}

TEST_CASE("exact division") {
  auto R = make_ring({"X", "Y"});
  CHECK(divide_exact(P(R, "X^2 - Y^2"), P(R, "X + Y")) == P(R, "X - Y"));
  CHECK_THROWS_AS(divide_exact(P(R, "X^2 + Y"), P(R, "X")), std::logic_error);
}

TEST_CASE("ideal calculus properties on random ideals") {
  auto R = make_ring({"X", "Y", "Z"}, {}, Field::prime(32003));
  std::mt19937_64 rng(2024);
  auto rand_ideal = [&](int n) {
    std::vector<Polynomial> g;
    for (int i = 0; i < n; ++i) g.push_back(random_poly(R, rng, 2, 2));
    return Ideal(R, g);
  };
  for (int it = 0; it < 12; ++it) {
    Ideal A = rand_ideal(2), B = rand_ideal(2);
    if (A.is_zero() || B.is_zero()) continue;
    Ideal cap = intersect(A, B);
    REQUIRE(A.contains(cap));
    REQUIRE(B.contains(cap));
    Ideal s = sum(A, B);
    REQUIRE(s.contains(A));
    REQUIRE(s.contains(B));
    REQUIRE(cap.contains(product(A, B)));

    Ideal C = colon(A, B);
    for (const auto& f : C.gens())
      for (const auto& g : B.gens()) REQUIRE(A.contains(f * g));

    Ideal p5 = power(A, 3), p23 = product(power(A, 1), power(A, 2));
    REQUIRE(equal_as_S_ideals(p5, p23));
  }
}
