#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "socle/socle.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::string field;
  std::uint64_t seed = 1;
  std::string json;
  std::uint64_t step_budget = 0;
  unsigned trunc_budget = 0;
  std::size_t oracle_cap = 2000;
  unsigned samples = 20;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { socle_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct ReportHandle {
  socle_report* r = nullptr;
  ~ReportHandle() { socle_report_free(r); }
};

struct RingHandle {
  socle_ring* r = nullptr;
  ~RingHandle() { socle_ring_free(r); }
};

socle_options options(const Globals& g) {
  socle_options o;
  socle_options_init(&o);
  o.field = g.field.empty() ? nullptr : g.field.c_str();
  o.seed = g.seed;
  o.step_budget = g.step_budget;
  o.trunc_budget = g.trunc_budget;
  o.oracle_cap = g.oracle_cap;
  o.samples = g.samples;
  return o;
}

bool write_json(const Globals& g, const std::string& text) {
  if (g.json == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(g.json);
  if (!out) {
    std::cerr << "error: cannot write " << g.json << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

int exit_for(socle_status s) {
  switch (s) {
    case SOCLE_OK: return kExitPass;
    case SOCLE_INPUT_ERROR: return kExitInput;
    default: return kExitBudget;
  }
}

int fail_with(const Globals& g, socle_status s, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  if (!g.json.empty()) {
    socle_options o = options(g);
    Owned j;
    if (socle_error_json(s, message.c_str(), &o, &j.p) == SOCLE_OK) write_json(g, j.str());
  }
  return exit_for(s);
}

int fail_with(const Globals& g, socle_status s) { return fail_with(g, s, socle_last_error()); }

// With a prefix, every text line is emitted as a ring file comment.
int finish(const Globals& g, socle_status s, const ReportHandle& rep, const std::string& prefix = "") {
  if (s != SOCLE_OK) return fail_with(g, s);
  if (g.json != "-") {
    Owned t;
    if (socle_report_text(rep.r, &t.p) != SOCLE_OK) return fail_with(g, SOCLE_INTERNAL_ERROR);
    std::istringstream lines(t.str());
    for (std::string line; std::getline(lines, line);) std::cout << prefix << line << "\n";
  }
  if (!g.json.empty()) {
    Owned j;
    if (socle_report_json(rep.r, 1, &j.p) != SOCLE_OK) return fail_with(g, SOCLE_INTERNAL_ERROR);
    if (!write_json(g, j.str())) return kExitInput;
  }
  return socle_report_pass(rep.r) ? kExitPass : kExitFail;
}

// `zoo:<id>` names a built-in ring, anything else is a ring file.
socle_status open_ring(const Globals& g, const std::string& spec, RingHandle& ring, std::string& err) {
  const char* field = g.field.empty() ? nullptr : g.field.c_str();
  if (spec.rfind("zoo:", 0) == 0) return socle_ring_zoo(spec.c_str() + 4, field, &ring.r);
  std::ifstream in(spec);
  if (!in) {
    err = "cannot read ring file " + spec;
    return SOCLE_INPUT_ERROR;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string label = spec;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label = label.substr(slash + 1);
  return socle_ring_parse(buf.str().c_str(), label.c_str(), field, &ring.r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides I^2 = QI for parameter ideals Q and I = Q : m in presented local rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(socle_version()));

  Globals g;
  app.add_option("--field", g.field, "coefficient field: qq or fp:P")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--json", g.json, "write the JSON report to this path, - for standard output");
  app.add_option("--step-budget", g.step_budget, "reduction steps per Groebner basis (0 keeps the default)");
  app.add_option("--trunc-budget", g.trunc_budget, "largest truncation level (0 keeps the default)");
  app.add_option("--oracle-cap", g.oracle_cap, "largest truncation dimension for oracle cross-checks")
      ->capture_default_str();
  app.add_option("--samples", g.samples, "sampled parameter ideals per family")->capture_default_str();

  std::string ring_spec, q;
  std::string expect;
  unsigned cap = 0;

  auto* check = app.add_subcommand("check", "decide a property of a parameter ideal");
  check->require_subcommand(1);
  auto* i2qi = check->add_subcommand("i2qi", "I^2 = QI for I = Q : m");
  i2qi->add_option("--ring", ring_spec, "ring file, or zoo:<id>")->required();
  i2qi->add_option("--q", q, "generators of Q, or the name of an ideal in the ring file")->required();
  i2qi->add_option("--expect", expect, "fail unless the verdict is this")->check(CLI::IsMember({"true", "false"}));

  auto* rednum = app.add_subcommand("rednum", "reduction number of I = Q : m with respect to Q");
  rednum->add_option("--ring", ring_spec, "ring file, or zoo:<id>")->required();
  rednum->add_option("--q", q, "generators of Q, or the name of an ideal in the ring file")->required();
  rednum->add_option("--cap", cap, "largest n tried (0 picks the default)");

  auto* invariants = app.add_subcommand("invariants", "dim, multiplicity, H0, depth probe, type estimate");
  invariants->add_option("--ring", ring_spec, "ring file, or zoo:<id>")->required();

  std::string zoo_id;
  auto* zoo = app.add_subcommand("zoo", "built-in rings");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "list built-in rings");
  auto* zoo_build = zoo->add_subcommand("build", "print a ring file and recheck its recorded invariants");
  zoo_build->add_option("id", zoo_id, "ring id")->required();

  std::vector<std::string> only;
  auto* repro = app.add_subcommand("repro", "run the experiment catalog");
  repro->add_option("--only", only, "run only these experiments");
  auto* experiments = app.add_subcommand("experiments", "list experiments");

  unsigned instances = 200;
  auto* split = app.add_subcommand("verify-colon-split", "random instances of the colon splitting identity");
  split->add_option("--instances", instances, "accepted instances required")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  socle_options o = options(g);
  ReportHandle rep;

  if (*check || *rednum || *invariants) {
    RingHandle ring;
    std::string err;
    socle_status s = open_ring(g, ring_spec, ring, err);
    if (s != SOCLE_OK) return err.empty() ? fail_with(g, s) : fail_with(g, s, err);
    if (i2qi->parsed()) {
      int e = expect.empty() ? -1 : (expect == "true" ? 1 : 0);
      return finish(g, socle_check_i2qi(ring.r, q.c_str(), e, &o, &rep.r), rep);
    }
    if (rednum->parsed()) return finish(g, socle_rednum(ring.r, q.c_str(), cap, &o, &rep.r), rep);
    return finish(g, socle_invariants(ring.r, &o, &rep.r), rep);
  }
  if (zoo_list->parsed()) {
    Owned list;
    socle_status s = socle_zoo_list(&list.p);
    if (s != SOCLE_OK) return fail_with(g, s);
    std::cout << list.str();
    return kExitPass;
  }
  if (zoo_build->parsed()) {
    RingHandle ring;
    socle_status s = socle_ring_zoo(zoo_id.c_str(), o.field, &ring.r);
    if (s != SOCLE_OK) return fail_with(g, s);
    Owned text;
    s = socle_ring_print(ring.r, &text.p);
    if (s != SOCLE_OK) return fail_with(g, s);
    if (g.json != "-") std::cout << text.str();
    return finish(g, socle_zoo_verify(zoo_id.c_str(), &o, &rep.r), rep, "# ");
  }
  if (*experiments) {
    Owned list;
    socle_status s = socle_experiment_list(&list.p);
    if (s != SOCLE_OK) return fail_with(g, s);
    std::cout << list.str();
    return kExitPass;
  }
  if (*repro) {
    std::vector<const char*> names;
    for (const auto& n : only) names.push_back(n.c_str());
    return finish(g, socle_repro(names.data(), names.size(), &o, &rep.r), rep);
  }
  if (*split) return finish(g, socle_verify_colon_split(instances, &o, &rep.r), rep);
  return kExitInput;
}
