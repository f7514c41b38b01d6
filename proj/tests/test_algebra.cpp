#include <doctest.h>

#include "socle/polynomial.hpp"
#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;

TEST_CASE("field construction and scalar arithmetic") {
  CHECK(is_prime_u64(32003));
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(32001));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_THROWS_AS(Field::prime(32001), InputError);
  CHECK(Field::parse("fp:32003") == Field::prime(32003));
  CHECK(Field::parse("QQ").is_rational());
  CHECK_THROWS_AS(Field::parse("fp:abc"), InputError);

  Field q = Field::rationals();
  Scalar a = Scalar(q, 1) / Scalar(q, 3);
  CHECK((a + a + a).is_one());
  CHECK(Scalar(q, 6) / Scalar(q, -4) == Scalar::from_q(mpq_class(-3, 2)));
  CHECK((Scalar(q, 6) / Scalar(q, -4)).to_string() == "-3/2");
  CHECK(Scalar(q, 0).q_value().get_den() == 1);

  Field f = Field::prime(7);
  CHECK((Scalar(f, 3) * Scalar(f, 5)).fp_value() == 1);
  CHECK((Scalar(f, 1) / Scalar(f, 3)).fp_value() == 5);
  CHECK(Scalar(f, 6).to_string() == "-1");
  CHECK_THROWS_AS(Scalar(f, 1) + Scalar(q, 1), InputError);
  CHECK_THROWS(Scalar(f, 1) / Scalar(f, 0));

  Field big = Field::prime(18446744073709551557ull);
  Scalar b(big, -1);
  CHECK((b * b).is_one());
  CHECK((b + Scalar(big, 1)).is_zero());
}

TEST_CASE("polynomial arithmetic examples") {
  for (Field fld : {Field::rationals(), Field::prime(32003)}) {
    auto R = make_ring({"X", "Y"}, {}, fld);
    auto X = var(R, "X"), Y = var(R, "Y");
    CHECK((X + Y) * (X - Y) == X * X - Y * Y);
    CHECK((X * X + X) * cst(R, 0) == Polynomial(R));
    CHECK(((X * X + X) * cst(R, 0)).is_zero());
    CHECK((X - X).is_zero());
  }
  auto R = make_ring({"X", "Y"});
  auto p = var(R, "X") * var(R, "X") - var(R, "Y") * var(R, "Y");
  CHECK(p.to_string() == "X^2 - Y^2");
  CHECK((-p).normalized().to_string() == "X^2 - Y^2");
  CHECK((p.scaled(Scalar(R->field(), 2)) - cst(R, 3)).to_string() == "2*X^2 - 2*Y^2 - 3");

  auto Rp = make_ring({"X"}, {}, Field::prime(7));
  auto q = var(Rp, "X").scaled(Scalar(Rp->field(), 3)) + cst(Rp, 6);
  CHECK(q.normalized().to_string() == "X + 2");
  CHECK(q.to_string() == "3*X - 1");
}

TEST_CASE("mixing rings is an error") {
  auto R = make_ring({"X", "Y"});
  auto S = make_ring({"X", "Y"}, {}, Field::prime(5));
  CHECK_THROWS_AS(var(R, "X") + var(S, "X"), InputError);
  auto R2 = make_ring({"X", "Y"});
  CHECK_NOTHROW(var(R, "X") + var(R2, "Y"));
}

TEST_CASE("weighted degree") {
  // weights e, e+1, ..., 2e-1 with e = 3
  auto R = make_ring({"X1", "X2", "X3"}, {3, 4, 5});
  CHECK(var(R, "X1").weighted_degree() == 3u);
  auto X1 = var(R, "X1"), X2 = var(R, "X2"), X3 = var(R, "X3");
  CHECK((X2 * X1 * X1 - X3 * X3).weighted_degree() == 10u);

  auto R4 = make_ring({"X1", "X2", "X3", "X4"}, {4, 5, 6, 7});
  auto d = var(R4, "X2") * var(R4, "X4") - var(R4, "X3") * var(R4, "X3");
  CHECK(d.weighted_degree() == 12u);
  CHECK(d.size() == 2);

  auto U = make_ring({"X", "Y"});
  CHECK_FALSE((var(U, "X") + var(U, "Y") * var(U, "Y")).weighted_degree().has_value());
  CHECK_THROWS(Polynomial(U).weighted_degree());
}

TEST_CASE("monomial order examples") {
  auto R = make_ring({"X", "Y"});
  Monomial x2 = R->monomial(std::vector<int>{2, 0}), xy = R->monomial(std::vector<int>{1, 1});
  CHECK(R->compare(x2, xy) > 0);

  auto E = make_ring({"X", "Y", "Z"}, {}, Field::rationals(), MonomialOrder::elimination(1));
  CHECK(E->compare(E->monomial(std::vector<int>{1, 0, 0}), E->monomial(std::vector<int>{0, 5, 0})) > 0);

  auto W = make_ring({"X", "Y"}, {1, 2});
  CHECK(W->compare(W->variable(1), W->variable(0)) > 0);

  auto L = make_ring({"X", "Y", "Z"}, {}, Field::rationals(), MonomialOrder::lex());
  CHECK(L->compare(L->monomial(std::vector<int>{1, 0, 0}), L->monomial(std::vector<int>{0, 9, 9})) > 0);

  // grevlex vs weighted lex on the same degree
  auto G = make_ring({"X", "Y", "Z"});
  auto WL = make_ring({"X", "Y", "Z"}, {}, Field::rationals(), MonomialOrder::weighted_lex());
  Monomial a = G->monomial(std::vector<int>{1, 0, 1}), b = G->monomial(std::vector<int>{0, 2, 0});
  CHECK(G->compare(a, b) < 0);
  CHECK(WL->compare(a, b) > 0);
}

TEST_CASE("ring axioms on random polynomials") {
  for (Field fld : {Field::rationals(), Field::prime(32003)}) {
    auto R = make_ring({"X", "Y", "Z"}, {1, 2, 3}, fld);
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
      auto a = random_poly(R, rng, 4, 3);
      auto b = random_poly(R, rng, 4, 3);
      auto c = random_poly(R, rng, 3, 2);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      REQUIRE((a - b) + b == a);
    }
  }
}

TEST_CASE("order axioms on random monomials") {
  std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::weighted_lex(), MonomialOrder::lex(),
                                       MonomialOrder::elimination(2)};
  for (const auto& ord : orders) {
    auto R = make_ring({"A", "B", "C", "D"}, {1, 3, 2, 1}, Field::rationals(), ord);
    std::mt19937_64 rng(99);
    Monomial one;
    for (int it = 0; it < 2000; ++it) {
      Monomial u = random_monomial(R, rng, 4), v = random_monomial(R, rng, 4), w = random_monomial(R, rng, 3);
      int c = R->compare(u, v);
      REQUIRE(c == -R->compare(v, u));
      REQUIRE((c == 0) == (u == v));
      if (c != 0) REQUIRE(((R->compare(u * w, v * w) > 0) == (c > 0)));
      if (!u.is_one()) REQUIRE(R->compare(u, one) > 0);
      Monomial x = random_monomial(R, rng, 4);
      if (R->compare(u, v) > 0 && R->compare(v, x) > 0) REQUIRE(R->compare(u, x) > 0);
    }
  }
}

TEST_CASE("homogeneous products add degrees") {
  auto R = make_ring({"X", "Y", "Z"}, {2, 3, 5});
  std::mt19937_64 rng(7);
  auto homog = [&](std::uint32_t deg) {
    std::vector<std::pair<Monomial, Scalar>> t;
    for (int a = 0; 2 * a <= int(deg); ++a)
      for (int b = 0; 2 * a + 3 * b <= int(deg); ++b) {
        int rest = int(deg) - 2 * a - 3 * b;
        if (rest % 5) continue;
        t.emplace_back(R->monomial(std::vector<int>{a, b, rest / 5}), Scalar(R->field(), long(rng() % 7) - 3));
      }
    return Polynomial::from_terms(R, t);
  };
  int checked = 0;
  for (std::uint32_t d1 = 5; d1 < 14; ++d1)
    for (std::uint32_t d2 = 5; d2 < 14; ++d2) {
      auto f = homog(d1), g = homog(d2);
      if (f.is_zero() || g.is_zero()) continue;
      CHECK(f.weighted_degree() == d1);
      CHECK((f * g).weighted_degree() == d1 + d2);
      ++checked;
    }
  CHECK(checked > 30);
}

TEST_CASE("mapping between rings and truncation") {
  auto R = make_ring({"X", "Y"});
  auto S = make_ring({"T", "X", "Y"}, {}, Field::rationals(), MonomialOrder::elimination(1));
  auto p = var(R, "X") * var(R, "Y") + var(R, "Y");
  std::vector<std::size_t> map = {1, 2};
  auto q = p.mapped(S, map);
  CHECK(q == var(S, "X") * var(S, "Y") + var(S, "Y"));
  CHECK(p.truncated(2) == var(R, "Y"));
  CHECK(p.constant_term().is_zero());
  CHECK((p + cst(R, 4)).constant_term() == Scalar(R->field(), 4));
  CHECK((var(R, "X") + var(R, "Y")).pow(3).size() == 4);
}
