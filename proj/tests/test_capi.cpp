#include <doctest.h>

#include <string>

#include "socle/socle.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  socle_string_free(s);
  return out;
}

socle_options defaults() {
  socle_options o;
  socle_options_init(&o);
  return o;
}

}  // namespace

TEST_CASE("ring handles") {
  socle_ring* ring = nullptr;
  REQUIRE(socle_ring_parse("field QQ\nvars X Y\nquotient X^2, X*Y\n", "cp", nullptr, &ring) == SOCLE_OK);
  char* text = nullptr;
  REQUIRE(socle_ring_print(ring, &text) == SOCLE_OK);
  CHECK(take(text) == "field QQ\nvars X Y\nweights 1 1\nquotient X^2, X*Y\n");
  socle_ring_free(ring);

  ring = nullptr;
  REQUIRE(socle_ring_parse("vars X Y\nquotient X^2\n", "cp", "fp:7", &ring) == SOCLE_OK);
  REQUIRE(socle_ring_print(ring, &text) == SOCLE_OK);
  CHECK(take(text).rfind("field FP 7\n", 0) == 0);
  socle_ring_free(ring);

  socle_ring_free(nullptr);
  socle_report_free(nullptr);
}

TEST_CASE("error codes") {
  socle_ring* ring = nullptr;
  CHECK(socle_ring_parse("vars X\nweights 0\n", "bad", nullptr, &ring) == SOCLE_INPUT_ERROR);
  CHECK(ring == nullptr);
  CHECK(std::string(socle_last_error()).find("weight") != std::string::npos);
  CHECK(socle_ring_parse("vars X\nquotient X +\n", "bad", nullptr, &ring) == SOCLE_INPUT_ERROR);
  CHECK(std::string(socle_last_error()).find("column") != std::string::npos);
  CHECK(socle_ring_parse(nullptr, "x", nullptr, &ring) == SOCLE_INPUT_ERROR);
  CHECK(socle_ring_zoo("no-such-ring", nullptr, &ring) == SOCLE_INPUT_ERROR);
  CHECK(socle_ring_zoo("fat-line", "fp:12", &ring) == SOCLE_INPUT_ERROR);

  REQUIRE(socle_ring_zoo("fat-line", nullptr, &ring) == SOCLE_OK);
  socle_report* rep = nullptr;
  auto o = defaults();
  CHECK(socle_check_i2qi(ring, "X", -1, &o, &rep) == SOCLE_INPUT_ERROR);
  CHECK(socle_check_i2qi(ring, nullptr, -1, &o, &rep) == SOCLE_INPUT_ERROR);
  CHECK(socle_check_i2qi(nullptr, "Z", -1, &o, &rep) == SOCLE_INPUT_ERROR);
  CHECK(rep == nullptr);
  o.step_budget = 1;
  CHECK(socle_rednum(ring, "Z", 0, &o, &rep) == SOCLE_BUDGET_ERROR);
  socle_ring_free(ring);

  char* json = nullptr;
  REQUIRE(socle_error_json(SOCLE_BUDGET_ERROR, "too big", nullptr, &json) == SOCLE_OK);
  auto j = take(json);
  CHECK(j.find("\"status\": \"error\"") != std::string::npos);
  CHECK(j.find("\"kind\": \"budget\"") != std::string::npos);
}

TEST_CASE("decisions through the C interface") {
  socle_ring* ring = nullptr;
  REQUIRE(socle_ring_parse("field QQ\nvars X Y\nquotient X^2, X*Y\nideal q = Y^3\n", "cp", nullptr, &ring) ==
          SOCLE_OK);
  auto o = defaults();
  socle_report* rep = nullptr;
  REQUIRE(socle_check_i2qi(ring, "q", 0, &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 1);
  char* json = nullptr;
  REQUIRE(socle_report_json(rep, 0, &json) == SOCLE_OK);
  auto j = take(json);
  CHECK(j.find("\"verdict\": false") != std::string::npos);
  CHECK(j.find("\"witness\": \"Y^4\"") != std::string::npos);
  CHECK(j.find("timing_ms") == std::string::npos);
  socle_report_free(rep);

  REQUIRE(socle_check_i2qi(ring, "Y^3", 1, &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 0);
  char* text = nullptr;
  REQUIRE(socle_report_text(rep, &text) == SOCLE_OK);
  CHECK(take(text).find("FAIL") != std::string::npos);
  socle_report_free(rep);
  socle_ring_free(ring);

  REQUIRE(socle_ring_zoo("semigroup-e3", nullptr, &ring) == SOCLE_OK);
  REQUIRE(socle_rednum(ring, "X1", 0, &o, &rep) == SOCLE_OK);
  REQUIRE(socle_report_json(rep, 1, &json) == SOCLE_OK);
  CHECK(take(json).find("\"r\": 2") != std::string::npos);
  socle_report_free(rep);
  REQUIRE(socle_invariants(ring, &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 1);
  socle_report_free(rep);
  socle_ring_free(ring);

  REQUIRE(socle_zoo_verify("quadric-cone", &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 1);
  socle_report_free(rep);
}

TEST_CASE("catalog and repro") {
  char* list = nullptr;
  REQUIRE(socle_zoo_list(&list) == SOCLE_OK);
  CHECK(take(list).find("semigroup-e4\t") != std::string::npos);
  REQUIRE(socle_experiment_list(&list) == SOCLE_OK);
  CHECK(take(list).find("colon-split\t") != std::string::npos);

  auto o = defaults();
  const char* only[] = {"principal-criterion"};
  socle_report* rep = nullptr;
  REQUIRE(socle_repro(only, 1, &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 1);
  socle_report_free(rep);
  const char* bad[] = {"nothing"};
  CHECK(socle_repro(bad, 1, &o, &rep) == SOCLE_INPUT_ERROR);
  CHECK(socle_repro(nullptr, 1, &o, &rep) == SOCLE_INPUT_ERROR);

  REQUIRE(socle_verify_colon_split(10, &o, &rep) == SOCLE_OK);
  CHECK(socle_report_pass(rep) == 1);
  socle_report_free(rep);
}
