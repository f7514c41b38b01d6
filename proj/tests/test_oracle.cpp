#include <doctest.h>

#include "socle/oracle.hpp"
#include "socle/zoo.hpp"
#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;
namespace orc = socle::oracle;

namespace {

Field fp() { return Field::prime(32003); }

ParamIdeal param(const LocalRing& A, std::string_view text) {
  return ParamIdeal::make(A, parse_polynomial_list(A.ring(), text));
}

std::uint64_t groebner_dim(const LocalRing& A, std::uint32_t K) {
  auto tb = truncated_basis(A.ring(), A.defining().gens(), K);
  return count_standard_monomials(tb.leads, A.ring()->arity(), K, 1u << 30);
}

}  // namespace

TEST_CASE("truncated algebra sizes") {
  auto cp = build_almost_dvr(fp()).ring;
  auto T = orc::TruncatedAlgebra::make(cp, 4);
  CHECK(T.dim() == 5);
  auto b = T.basis();
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<std::string>{"1", "X", "Y", "Y^2", "Y^3"});

  LocalRing line(make_ring({"X"}), {});
  CHECK(orc::TruncatedAlgebra::make(line, 3).dim() == 3);

  auto B = build_fat_line(fp()).ring;
  CHECK(orc::TruncatedAlgebra::make(B, 4).dim() == groebner_dim(B, 4));
  CHECK_THROWS_AS(orc::TruncatedAlgebra::make(B, 0), InputError);
  orc::Options tiny;
  tiny.cap = 3;
  CHECK_THROWS_AS(orc::TruncatedAlgebra::make(B, 4, tiny), BudgetError);
}

TEST_CASE("dimension matches the groebner truncation") {
  for (const auto& id : {"almost-dvr", "semigroup-e3", "plane-line-l2", "fat-line", "two-planes", "quadric-cone"}) {
    CAPTURE(id);
    auto z = build_zoo(id, fp());
    for (std::uint32_t K = 1; K <= 6; ++K) {
      auto T = orc::TruncatedAlgebra::make(z.ring, K);
      CHECK(T.dim() == groebner_dim(z.ring, K));
      CHECK(T.check_ring_axioms(100, K));
    }
  }
}

TEST_CASE("rational rings default to the prime oracle field") {
  auto A = build_fat_line(Field::rationals()).ring;
  CHECK(orc::oracle_field(A, {}) == Field::prime(32003));
  orc::Options q;
  q.field = Field::rationals();
  CHECK(orc::oracle_field(A, q).is_rational());
  CHECK(orc::TruncatedAlgebra::make(A, 5, q).dim() == orc::TruncatedAlgebra::make(A, 5).dim());
  auto P = build_fat_line(Field::prime(101)).ring;
  CHECK(orc::oracle_field(P, q) == Field::prime(101));
}

TEST_CASE("subspaces") {
  auto cp = build_almost_dvr(fp()).ring;
  auto T = orc::TruncatedAlgebra::make(cp, 4);
  CHECK(T.subspace_of(cp.maximal()).codim() == 1);
  CHECK(T.subspace_of(Ideal::unit(cp.ring())).codim() == 0);
  CHECK(T.zero().dim() == 0);

  auto R = cp.ring();
  auto T6 = orc::TruncatedAlgebra::make(cp, 6);
  auto q = T6.subspace_of(ideal(R, "Y^3"));
  auto i = T6.subspace_of(ideal(R, "X, Y^2"));
  auto qi = q.product(i);
  auto i2 = i.product(i);
  CHECK(i2.contains(qi));
  CHECK_FALSE(qi.contains(i2));
  CHECK(T6.contains(i2, P(R, "Y^4")));
  CHECK_FALSE(T6.contains(qi, P(R, "Y^4")));
}

TEST_CASE("colons and socles") {
  auto cp = build_almost_dvr(fp()).ring;
  auto T = orc::TruncatedAlgebra::make(cp, 4);
  // the raw socle of T_4 also holds the boundary class y^3
  CHECK(T.colon(T.zero(), cp.maximal()).dim() == 2);
  auto soc = T.socle();
  CHECK(soc.dim() == 1);
  CHECK(soc == T.subspace_of(ideal(cp.ring(), "X")));

  auto J = T.subspace_of(ideal(cp.ring(), "Y^2"));
  CHECK(T.colon(J, Ideal::unit(cp.ring())) == J);

  auto s = build_semigroup(3, fp());
  auto I = s.ring.ideal({P(s.ring.ring(), "X1"), P(s.ring.ring(), "X2"), semigroup_delta(s)});
  auto a = orc::socle_matches(s.ring, ideal(s.ring.ring(), "X1"), I);
  CHECK(a.value);
  CHECK(a.number == 2);
}

TEST_CASE("echelon forms are deterministic") {
  auto B = build_fat_line(fp()).ring;
  auto J = ideal(B.ring(), "Z^2 + X*Y, X^2");
  auto r1 = orc::TruncatedAlgebra::make(B, 5).subspace_of(J).rows();
  auto r2 = orc::TruncatedAlgebra::make(B, 5).subspace_of(J).rows();
  CHECK(r1 == r2);
  CHECK_FALSE(r1.empty());
}

TEST_CASE("decisions agree with the groebner path") {
  SUBCASE("almost dvr") {
    auto cp = build_almost_dvr(fp()).ring;
    for (int k = 1; k <= 4; ++k) {
      auto Q = param(cp, "Y^" + std::to_string(k));
      auto v = check_i2_eq_qi(cp, Q);
      auto o = orc::i2_eq_qi(cp, Q.ideal());
      CHECK(v.answer == o.value);
      CHECK(v.get("index") == static_cast<std::int64_t>(o.number));
      CHECK(orc::socle_matches(cp, Q.ideal(), socle_ideal(cp, Q)).value);
      CHECK(orc::length(cp, Q.ideal())->number == Q.colength());
    }
  }
  SUBCASE("semigroup reduction numbers") {
    for (unsigned e : {3u, 4u}) {
      auto s = build_semigroup(e, fp());
      auto Q = param(s.ring, "X1");
      auto r = orc::reduction_number(s.ring, Q.ideal(), e);
      REQUIRE(r);
      CHECK(r->number == e - 1);
      CHECK(orc::i2_eq_qi(s.ring, Q.ideal()).value == check_i2_eq_qi(s.ring, Q).answer);
    }
  }
  SUBCASE("random parameters") {
    std::mt19937_64 rng(17);
    for (const auto& id : {"fat-line", "plane-line-l1", "plane-line-l2", "quadric-cone"}) {
      CAPTURE(id);
      auto z = build_zoo(id, fp());
      for (int t = 0; t < 4; ++t) {
        auto Q = ParamIdeal::make(z.ring, sample_sop(z.ring, 1 + t % 2, rng));
        CAPTURE(Q.ideal().to_string());
        auto v = check_i2_eq_qi(z.ring, Q);
        auto o = orc::i2_eq_qi(z.ring, Q.ideal());
        CHECK(v.answer == o.value);
        CHECK(v.get("index") == static_cast<std::int64_t>(o.number));
        CHECK(orc::length(z.ring, Q.ideal())->number == Q.colength());
        auto I = socle_ideal(z.ring, Q);
        CHECK(orc::socle_matches(z.ring, Q.ideal(), I).value);
        auto f = Q.gens()[0] * Q.gens()[0] + P(z.ring.ring(), "X^5");
        CHECK(orc::contains(z.ring, Q.ideal(), f).value == contains_local(z.ring, z.ring.ideal({f}), Q.ideal()).answer);
      }
    }
  }
  SUBCASE("equality") {
    auto s = build_semigroup(3, fp());
    const auto& R = s.ring.ring();
    auto J = s.ring.ideal({P(R, "X1"), P(R, "X2"), semigroup_delta(s)});
    auto x1 = s.ring.ideal({P(R, "X1")});
    CHECK(orc::equal(s.ring, power(J, 3), product(x1, power(J, 2))).value);
    CHECK_FALSE(orc::equal(s.ring, power(J, 2), product(x1, J)).value);
    CHECK(orc::equal(s.ring, power(J, 2), power(ideal(R, "X1, X2"), 2)).value);
  }
}

TEST_CASE("non m-primary ideals have no oracle length") {
  auto s = build_semigroup(3, fp());
  orc::Options small;
  small.cap = 200;
  CHECK_FALSE(orc::length(s.ring, s.ring.ideal({semigroup_delta(s)}), small));
}
