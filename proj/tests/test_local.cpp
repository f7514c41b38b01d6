#include <doctest.h>

#include "socle/local.hpp"
#include "socle/zoo.hpp"
#include "test_support.hpp"

using namespace socle;
using namespace socle::testing;

namespace {

Field fp() { return Field::prime(32003); }

ParamIdeal param(const LocalRing& A, std::string_view text) {
  return ParamIdeal::make(A, parse_polynomial_list(A.ring(), text));
}

LocalRing regular(std::vector<std::string> names) {
  auto R = make_ring(std::move(names));
  return LocalRing(R, {});
}

}  // namespace

TEST_CASE("stable truncation lengths") {
  auto A = regular({"X", "Y", "Z"});
  auto L = stable_trunc_dim(A, ideal(A.ring(), "X^3, X - Y, Z"));
  CHECK(L.finite);
  CHECK(L.length == 3);
  CHECK(stable_trunc_dim(A, A.maximal()).length == 1);

  auto B = build_fat_line(fp()).ring;
  auto z = stable_trunc_dim(B, ideal(B.ring(), "Z"));
  CHECK(z.finite);
  CHECK(z.length == 4);
}

TEST_CASE("systems of parameters") {
  auto cp = build_almost_dvr(fp()).ring;
  CHECK(is_sop(cp, {P(cp.ring(), "Y^3")}).answer);
  auto s = build_semigroup(3, fp());
  CHECK_FALSE(is_sop(s.ring, {semigroup_delta(s)}).answer);
  auto A = regular({"X", "Y"});
  CHECK(is_sop(A, parse_polynomial_list(A.ring(), "X, Y")).answer);
  CHECK_THROWS_AS(param(A, "X"), InputError);
}

TEST_CASE("socle ideals") {
  auto s = build_semigroup(3, fp());
  auto Q = param(s.ring, "X1");
  auto I = socle_ideal(s.ring, Q);
  auto expected = s.ring.ideal({P(s.ring.ring(), "X1"), P(s.ring.ring(), "X2"), semigroup_delta(s)});
  CHECK(check_equal_local(s.ring, I, expected).answer);

  auto B = build_fat_line(fp()).ring;
  auto IB = socle_ideal(B, param(B, "Z"));
  CHECK(check_equal_local(B, IB, ideal(B.ring(), "Z, X^2, Y")).answer);

  auto K = regular({"X"});
  CHECK(socle_ideal(K, param(K, "X")).is_unit());
}

TEST_CASE("local equality") {
  auto cp = build_almost_dvr(fp()).ring;
  auto Q = param(cp, "Y^3");
  auto I = socle_ideal(cp, Q);
  CHECK(check_equal_local(cp, I, ideal(cp.ring(), "X, Y^2")).answer);
  auto v = check_equal_local(cp, power(I, 2), product(Q.ideal(), I));
  CHECK_FALSE(v.answer);
  REQUIRE(v.witness);
  CHECK(check_equal_local(cp, I, I).answer);

  auto s = build_semigroup(3, fp());
  auto J = socle_ideal(s.ring, param(s.ring, "X1"));
  auto x1 = s.ring.ideal({P(s.ring.ring(), "X1")});
  CHECK(check_equal_local(s.ring, power(J, 3), product(x1, power(J, 2))).answer);
  CHECK_FALSE(check_equal_local(s.ring, power(J, 2), product(x1, J)).answer);
}

TEST_CASE("I^2 = QI examples") {
  auto B = build_fat_line(fp()).ring;
  CHECK(check_i2_eq_qi(B, param(B, "Z^2")).answer);
  auto first = build_plane_line(1, fp()).ring;
  CHECK_FALSE(check_i2_eq_qi(first, param(first, "X - Y, Y^2 - Z^2")).answer);
  auto s = build_semigroup(3, fp());
  auto v = check_i2_eq_qi(s.ring, param(s.ring, "X1"));
  CHECK_FALSE(v.answer);
  CHECK(v.get("index") == 2);
}

TEST_CASE("reduction numbers") {
  for (unsigned e : {3u, 4u}) {
    auto s = build_semigroup(e, fp());
    auto r = reduction_number(s.ring, param(s.ring, "X1"));
    REQUIRE(r.value);
    CHECK(*r.value == e - 1);
  }
  auto B = build_fat_line(fp()).ring;
  auto r = reduction_number(B, param(B, "Z"));
  REQUIRE(r.value);
  CHECK(*r.value == 2);
  auto K = regular({"X", "Y"});
  auto q = reduction_number(K, param(K, "X, Y^2"), 4);
  CHECK_FALSE(q.value);
  CHECK(q.cap == 4);
}

TEST_CASE("multiplicities") {
  CHECK(multiplicity(build_semigroup(4, fp()).ring) == 4);
  CHECK(multiplicity(build_plane_line(2, fp()).ring) == 2);
  CHECK(multiplicity(build_fat_line(fp()).ring) == 3);
  auto hs = hilbert_samuel(regular({"X", "Y"}), std::nullopt);
  CHECK(hs.multiplicity == 1);
  CHECK(hs.degree == 2);
}

TEST_CASE("index of reducibility") {
  auto s = build_semigroup(3, fp());
  CHECK(index_of_reducibility(s.ring, param(s.ring, "X1")) == 2);
  auto B = build_fat_line(fp()).ring;
  CHECK(index_of_reducibility(B, param(B, "Z")) == 2);
  CHECK(index_of_reducibility(B, param(B, "Z + X")) == 1);
}

TEST_CASE("minimal generators") {
  auto A = regular({"X", "Y", "Z"});
  CHECK(min_gens(A, ideal(A.ring(), "X^3, Y^2, Z^2, X*Y, Y*Z, Z*X")) == 6);
  CHECK(min_gens(A, A.maximal()) == 3);
  CHECK(min_gens(A, ideal(A.ring(), "X, Y, X + Y, Z^2")) == 3);
}

TEST_CASE("zeroth local cohomology") {
  auto s = build_semigroup(3, fp());
  auto w = h0(s.ring);
  CHECK(check_equal_local(s.ring, s.ring.ideal(w), s.ring.ideal({semigroup_delta(s)})).answer);
  CHECK(h0_length(s.ring) == 1);
  auto B = build_fat_line(fp()).ring;
  CHECK(check_equal_local(B, B.ideal(h0(B)), ideal(B.ring(), "X^2")).answer);
  auto cone = build_quadric_cone(fp()).ring;
  CHECK(h0(cone).empty());
}

TEST_CASE("m-multiples") {
  auto cp = build_almost_dvr(fp()).ring;
  CHECK_FALSE(m_multiples_check(cp, param(cp, "Y^3")).answer);
  auto s = build_semigroup(3, fp());
  auto v = m_multiples_check(s.ring, param(s.ring, "X1"));
  CHECK(v.answer);
  CHECK(v.get("m_i_in_m_q") == 1);
}

TEST_CASE("d-sequences") {
  auto A = regular({"X", "Y", "Z"});
  CHECK(is_d_sequence(A, parse_polynomial_list(A.ring(), "X, Y, Z")).answer);
  auto cp = build_almost_dvr(fp()).ring;
  CHECK(is_d_sequence(cp, {P(cp.ring(), "Y")}).answer);
  auto R = make_ring({"X", "Y"});
  LocalRing xy(R, parse_polynomial_list(R, "X*Y"));
  CHECK_FALSE(is_d_sequence(xy, parse_polynomial_list(R, "X, Y")).answer);
  CHECK(is_strong_d_sequence(A, parse_polynomial_list(A.ring(), "X, Y"), 2).answer);
}

TEST_CASE("colon split") {
  auto cp = build_almost_dvr(fp()).ring;
  const auto& R = cp.ring();
  auto v = verify_colon_split(cp, cp.ideal({}), P(R, "Y"), ideal(R, "X"), cp.maximal(), 2);
  CHECK_FALSE(v.skipped);
  CHECK(v.answer);
  auto A = regular({"X", "Y"});
  auto w = verify_colon_split(A, ideal(A.ring(), "X"), P(A.ring(), "Y"), A.ideal({}), A.maximal(), 3);
  CHECK_FALSE(w.skipped);
  CHECK(w.answer);
  auto bad = verify_colon_split(A, A.ideal({}), P(A.ring(), "Y"), ideal(A.ring(), "X"), A.maximal(), 2);
  CHECK(bad.skipped);
}

TEST_CASE("strong d-sequence colon") {
  auto s = build_semigroup(3, fp());
  auto v = verify_strong_dseq_colon(s.ring, {P(s.ring.ring(), "X1")}, {2}, s.ring.maximal());
  CHECK_FALSE(v.skipped);
  CHECK(v.answer);
}

TEST_CASE("type estimates") {
  auto s = build_semigroup(3, fp());
  CHECK(estimate_cm_type(s.ring, 3, 5, 7).max == 3);
  auto B = build_fat_line(fp()).ring;
  CHECK(estimate_cm_type(B, 2, 5, 7).max == 3);
  CHECK(estimate_cm_type(regular({"X"}), 2, 5, 7).max == 1);
}

TEST_CASE("Buchsbaum probes") {
  auto B = build_fat_line(fp()).ring;
  CHECK(buchsbaum_probe(B, 20, 3).answer);
  auto inv = invariance_probe(B, 20, 3);
  CHECK(inv.values == std::vector<std::int64_t>{1});
  auto first = build_plane_line(1, fp()).ring;
  CHECK_FALSE(buchsbaum_probe(first, 20, 3).answer);
  auto K = regular({"X", "Y"});
  CHECK(buchsbaum_probe(K, 5, 3).answer);
  CHECK(invariance_probe(K, 5, 3).values == std::vector<std::int64_t>{0});
}

TEST_CASE("dimension and depth") {
  auto first = build_plane_line(1, fp()).ring;
  CHECK(krull_dim(first) == 2);
  CHECK(depth_probe(first) == 1);
  CHECK(krull_dim(build_semigroup(3, fp()).ring) == 1);
  auto A = regular({"X", "Y", "Z"});
  CHECK(krull_dim(A) == 3);
  CHECK(depth_probe(A) == 3);
}

TEST_CASE("zoo entries verify") {
  for (const auto& id : zoo_ids()) {
    if (id == "semigroup-e5") continue;
    CAPTURE(id);
    auto z = build_zoo(id, fp());
    auto c = verify_entry(z);
    for (const auto& m : c.mismatches) MESSAGE(m);
    CHECK(c.ok);
  }
}
