#include <doctest.h>

#include <set>

#include "socle/commands.hpp"
#include "socle/experiments.hpp"

using namespace socle;

namespace {

RunOptions quick() {
  RunOptions o;
  o.samples = 4;
  o.split_instances = 20;
  o.dseq_instances = 10;
  return o;
}

}  // namespace

TEST_CASE("catalog") {
  auto cat = experiment_catalog();
  CHECK(cat.size() == 13);
  std::set<std::string> names;
  for (const auto& e : cat) {
    CHECK_FALSE(e.summary.empty());
    names.insert(e.name);
  }
  CHECK(names.size() == cat.size());
  CHECK_THROWS_AS(run_experiment("nothing", quick()), InputError);
  CHECK_THROWS_AS(run_repro(quick(), {"nothing"}), InputError);
}

TEST_CASE("quick experiments pass") {
  for (const auto& name : {"principal-criterion", "fat-line-table", "cm-spot", "index-stability", "power-exponents",
                           "strong-dseq-colon", "colon-split"}) {
    CAPTURE(name);
    auto r = run_experiment(name, quick());
    CHECK(r.pass);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      CAPTURE(c.operation);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("oracle disagreements and wrong predictions fail a check") {
  auto r = run_experiment("principal-criterion", quick());
  bool cross_checked = false;
  for (const auto& c : r.checks) cross_checked |= c.oracle.has_value();
  CHECK(cross_checked);

  Report rep;
  ExperimentResult e;
  Check c;
  c.pass = false;
  e.checks.push_back(c);
  e.pass = false;
  rep.experiments.push_back(e);
  CHECK(e.violations() == 1);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("reports are deterministic apart from timings") {
  auto a = run_repro(quick(), {"fat-line-table", "index-stability"});
  auto b = run_repro(quick(), {"fat-line-table", "index-stability"});
  CHECK(to_json_without_timings(a) == to_json_without_timings(b));
  CHECK(to_json_without_timings(a).find("timing_ms") == std::string::npos);
  CHECK(to_json(a).find("timing_ms") != std::string::npos);
  CHECK(a.find("index-stability") != nullptr);
  CHECK(a.find("semigroup-chain") == nullptr);

  RunOptions other = quick();
  other.seed = 2;
  CHECK(to_json_without_timings(run_repro(other, {"index-stability"})) !=
        to_json_without_timings(run_repro(quick(), {"index-stability"})));
}

TEST_CASE("field of a report") {
  RunOptions q = quick();
  q.field = Field::rationals();
  auto r = run_repro(q, {"principal-criterion"});
  CHECK(r.field == "qq");
  CHECK(r.pass());
}

TEST_CASE("commands") {
  auto cp = load_ring("vars X Y\nquotient X^2, X*Y\nideal q = Y^3\n", "cp");
  CHECK(resolve_ideal(cp, "q").size() == 1);
  CHECK(resolve_ideal(cp, "Y^3, X").size() == 2);
  CHECK_THROWS_AS(resolve_ideal(cp, "r"), InputError);

  auto r = check_i2qi_command(cp, "q", false, {});
  REQUIRE(r.experiments.size() == 1);
  const auto& c = r.experiments[0].checks.at(0);
  CHECK(c.verdict == false);
  CHECK(c.pass);
  CHECK(c.witness.has_value());

  auto fp = load_ring("field QQ\nvars X Y\nquotient X^2, X*Y\n", "cp", Field::prime(5));
  CHECK(fp.local.ring()->field() == Field::prime(5));

  auto fat = zoo_ring("fat-line", Field::prime(32003));
  auto rn = rednum_command(fat, "Z", std::nullopt, {});
  CHECK(rn.experiments[0].checks[0].get("r") == 2);
  auto zv = zoo_verify_command("semigroup-e3", Field::prime(32003), {});
  CHECK(zv.pass());
}
