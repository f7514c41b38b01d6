#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;

namespace {

// Buchberger's criterion checked directly: every S-polynomial reduces to zero.
bool is_groebner(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const RingPtr& R = G[i].ring();
      Monomial l = lcm(G[i].lead_monomial(), G[j].lead_monomial(), R->weights());
      auto s = G[i].times(quotient(l, G[i].lead_monomial())).scaled(G[j].lead_coeff()) -
               G[j].times(quotient(l, G[j].lead_monomial())).scaled(G[i].lead_coeff());
      if (!reduce(s, G).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].lead_coeff().is_one()) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (std::size_t t = 0; t < G[i].size(); ++t) {
        if (divides(G[j].lead_monomial(), G[i].monomial(t))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reduced basis examples") {
  auto R = make_ring({"X", "Y"});
  CHECK(strings(ideal(R, "X^2, X*Y").basis()) == std::vector<std::string>{"X^2", "X*Y"});
  CHECK(strings(ideal(R, "X*Y, X^2").basis()) == std::vector<std::string>{"X^2", "X*Y"});

  auto L = make_ring({"X", "Y"}, {}, Field::rationals(), MonomialOrder::lex());
  CHECK(strings(ideal(L, "X*Y - 1, Y^2 - 1").basis()) == std::vector<std::string>{"X - Y", "Y^2 - 1"});
  // the same ideal asked for a lex basis from a grevlex ring
  auto G = ideal(R, "X*Y - 1, Y^2 - 1");
  CHECK(strings(G.basis(MonomialOrder::lex())) == std::vector<std::string>{"X - Y", "Y^2 - 1"});
}

TEST_CASE("fat-line defining ideal has free Z direction") {
  auto R = make_ring({"X", "Y", "Z"});
  auto a = ideal(R, "X^3, X*Y, Y^2 - X*Z");
  const auto& B = a.basis();
  CHECK(is_groebner(B));
  CHECK(is_reduced(B));
  std::vector<Monomial> leads;
  for (const auto& b : B) leads.push_back(b.lead_monomial());
  // standard monomials free of Z are finite: 1, X, X^2, Y
  auto std8 = standard_monomials(leads, 3, 8, 1000);
  std::size_t no_z = std::count_if(std8.begin(), std8.end(), [](const Monomial& m) { return m.exp[2] == 0; });
  CHECK(no_z == 4);
  auto std9 = standard_monomials(leads, 3, 9, 1000);
  CHECK(std9.size() > std8.size());
}

TEST_CASE("normal forms and membership") {
  auto R = make_ring({"X", "Y", "Z"});
  CHECK(ideal(R, "X^2, X*Y").normal_form(P(R, "X^2")).is_zero());
  CHECK(ideal(R, "Y^2 - X*Z").normal_form(P(R, "Y^2")) == P(R, "X*Z"));
  CHECK(ideal(R, "X^2, X*Y").contains(P(R, "X^2*Y")));
  CHECK_FALSE(ideal(R, "X^2, X*Y").contains(P(R, "X*Z")));

  auto J = ideal(R, "X^3 - Y*Z, Y^2 - Z + X");
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    auto f = random_poly(R, rng, 5, 3);
    auto nf = J.normal_form(f);
    CHECK(J.normal_form(nf) == nf);
    CHECK(J.contains(f - nf));
  }
}

TEST_CASE("toric kernel membership for the numerical semigroup of degrees 3, 4, 5") {
  // 2x2 minors of [[X1, X2, X3], [X2, X3, X1^2]]
  auto R = make_ring({"X1", "X2", "X3"}, {3, 4, 5});
  auto p = ideal(R, "X1*X3 - X2^2, X1^3 - X2*X3, X2*X1^2 - X3^2");
  CHECK(p.contains(P(R, "X2^3 - X1^4")));
  CHECK_FALSE(p.contains(P(R, "X3")));

  auto R4 = make_ring({"X1", "X2", "X3", "X4"}, {4, 5, 6, 7});
  auto p4 = ideal(R4, "X1*X3 - X2^2, X1*X4 - X2*X3, X1^3 - X2*X4, X2*X4 - X3^2, X2*X1^2 - X3*X4, X3*X1^2 - X4^2");
  CHECK_FALSE(p4.contains(P(R4, "X2*X3")));  // X2^(e-3)*X3 with e = 4
  CHECK(p4.contains(P(R4, "X2^4 - X1^5")));
}

TEST_CASE("elimination") {
  auto R = make_ring({"T", "X", "Y"});
  auto e = eliminate(ideal(R, "T*X, (1 - T)*Y"), {1, 2});
  CHECK(strings(e.basis()) == std::vector<std::string>{"X*Y"});

  auto S = make_ring({"X", "Y"});
  CHECK(eliminate(ideal(S, "X - Y^2"), {0}).is_zero());

  auto W = make_ring({"T", "X", "Y", "Z"});
  auto w = eliminate(ideal(W, "T*X^2, (1 - T)*Y, (1 - T)*Z"), {1, 2, 3});
  CHECK(strings(w.basis()) == std::vector<std::string>{"X^2*Y", "X^2*Z"});
}

TEST_CASE("bases do not depend on generator order") {
  auto R = make_ring({"X", "Y", "Z"}, {1, 2, 1}, Field::prime(32003));
  std::mt19937_64 rng(11);
  for (int it = 0; it < 15; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(R, rng, 3, 2));
    auto a = Ideal(R, gens).basis();
    std::reverse(gens.begin(), gens.end());
    auto b = Ideal(R, gens).basis();
    REQUIRE(a == b);
    REQUIRE(is_groebner(a));
    REQUIRE(is_reduced(a));
  }
}

TEST_CASE("random ideals over QQ satisfy the basis criterion") {
  auto R = make_ring({"X", "Y", "Z"});
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(R, rng, 3, 2));
    Ideal J(R, gens);
    REQUIRE(is_groebner(J.basis()));
    REQUIRE(is_reduced(J.basis()));
    for (const auto& g : gens) REQUIRE(J.contains(g));
  }
}

TEST_CASE("truncated bases") {
  auto R = make_ring({"X", "Y"});
  auto tb = truncated_basis(R, parse_polynomial_list(R, "X^2, X*Y"), 4);
  CHECK(count_standard_monomials(tb.leads, 2, 4, 100) == 5);

  // a non-homogeneous generator: X - Y^2 at level 3 gives X = Y^2, so 1, Y, Y^2
  auto tb2 = truncated_basis(R, parse_polynomial_list(R, "X - Y^2"), 3);
  CHECK(count_standard_monomials(tb2.leads, 2, 3, 100) == 3);
  // the unit survives truncation
  auto tb3 = truncated_basis(R, parse_polynomial_list(R, "1 + X"), 5);
  CHECK(tb3.is_unit());
  // X + Y^3 is X up to higher order, and X*(1 + Y) generates (X) locally
  auto tb4 = truncated_basis(R, parse_polynomial_list(R, "X + X*Y"), 6);
  CHECK(count_standard_monomials(tb4.leads, 2, 6, 100) == 6);
}

TEST_CASE("step budget") {
  auto R = make_ring({"X", "Y", "Z"});
  LimitsScope scope(Limits{2, 40});
  CHECK_THROWS_AS(Ideal(R, parse_polynomial_list(R, "X^2 - Y, X^2 - Z, X*Y - 1")).basis(),
                  BudgetError);
}
