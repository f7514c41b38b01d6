// Runs the experiment catalog and prints one pass/fail line per acceptance
// criterion. Exit status 0 iff every criterion passes.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "socle/experiments.hpp"

using namespace socle;

namespace {

struct Line {
  int number;
  bool pass;
  std::string text;
};

const ExperimentResult& need(const Report& r, const std::string& name) {
  if (const auto* e = r.find(name)) return *e;
  throw std::runtime_error("experiment missing from report: " + name);
}

double ring_time(const ExperimentResult& e, const std::string& ring) {
  double t = 0;
  for (const auto& c : e.checks) {
    if (c.ring == ring) t += c.timing_ms;
  }
  return t;
}

bool has_row(const ExperimentResult& e, const std::string& op, const std::string& ring,
             const std::function<bool(const Check&)>& pred) {
  for (const auto& c : e.checks) {
    if (c.operation == op && c.ring == ring && c.pass && pred(c)) return true;
  }
  return false;
}

std::string fmt_s(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", ms / 1000.0);
  return buf;
}

std::int64_t value_of(const ExperimentResult& e, const std::string& op, const std::string& key) {
  for (const auto& c : e.checks) {
    if (c.operation == op) {
      if (auto v = c.get(key)) return *v;
    }
  }
  return -1;
}

// (operation, ring, verdict, expected) for every check, in order.
std::vector<std::string> verdicts(const ExperimentResult& e) {
  std::vector<std::string> out;
  auto b = [](const std::optional<bool>& x) { return x ? (*x ? "1" : "0") : "-"; };
  for (const auto& c : e.checks) {
    out.push_back(c.operation + "|" + c.ring + "|" + b(c.verdict) + "|" + b(c.expected) + "|" + (c.pass ? "1" : "0"));
  }
  return out;
}

const std::vector<std::vector<std::string>> kCriterionExperiments = {
    {"semigroup-chain"},
    {"principal-criterion"},
    {"plane-line-table"},
    {"fat-line-table"},
    {"cm-spot"},
    {"colon-split", "strong-dseq-colon", "m-multiples", "rednum-bound"},
    {},
    {"index-stability"},
};

std::vector<Line> evaluate(const Report& fp, const Report& fp2, const Report* qq) {
  std::vector<Line> lines;

  {
    const auto& e = need(fp, "semigroup-chain");
    bool ok = e.pass;
    std::string detail;
    for (unsigned k : {3u, 4u, 5u}) {
      std::string ring = "semigroup-e" + std::to_string(k);
      bool rows = has_row(e, "reduction_number", ring, [&](const Check& c) { return c.get("r") == k - 1; }) &&
                  has_row(e, "type_estimate", ring, [&](const Check& c) { return c.get("max") == k; }) &&
                  has_row(e, "multiplicity", ring, [&](const Check& c) { return c.get("e") == k; });
      double t = ring_time(e, ring);
      ok = ok && rows && t < 60000;
      detail += " e=" + std::to_string(k) + ": " + fmt_s(t);
      if (qq) {
        double tq = ring_time(need(*qq, "semigroup-chain"), ring);
        ok = ok && tq < 600000;
        detail += " (qq " + fmt_s(tq) + ")";
      }
      detail += ";";
    }
    lines.push_back({1, ok, "semigroup rings e = 3, 4, 5: dim, H0, socle ideal, powers, r = e - 1, e(A), type;" +
                                detail + " " + std::to_string(e.violations()) + " violations"});
  }
  {
    const auto& e = need(fp, "principal-criterion");
    lines.push_back({2, e.pass && e.timing_ms < 5000,
                     "principal parameter ideals in k[X,Y]/(X^2, XY): " + std::to_string(e.checks.size()) +
                         " checks, " + std::to_string(e.violations()) + " violations, " + fmt_s(e.timing_ms)});
  }
  {
    const auto& e = need(fp, "plane-line-table");
    bool stated = has_row(e, "i2_eq_qi", "plane-line-l1", [](const Check& c) {
      auto it = std::find_if(c.inputs.begin(), c.inputs.end(), [](const auto& kv) { return kv.first == "Q"; });
      return it != c.inputs.end() && it->second == "(X - Y, Y^2 - Z^2)" && c.verdict == false;
    });
    bool bounded = true;
    for (const auto& c : e.checks) {
      if (auto i = c.get("index")) bounded = bounded && *i <= 2;
    }
    lines.push_back({3, e.pass && stated && bounded && e.timing_ms < 300000,
                     "plane and line, l = 1, 2, 3: " + std::to_string(e.checks.size()) + " checks, " +
                         std::to_string(e.violations()) + " violations, index <= 2 " + (bounded ? "yes" : "no") +
                         ", (x - y, y^2 - z^2) gives I^2 != QI " + (stated ? "yes" : "no") + ", " +
                         fmt_s(e.timing_ms)});
  }
  {
    const auto& e = need(fp, "fat-line-table");
    unsigned grid = 0;
    for (const auto& c : e.checks) {
      if (c.operation == "i2_eq_qi" && c.inputs.size() > 1) ++grid;
    }
    lines.push_back({4, e.pass && grid == 27 && e.timing_ms < 120000,
                     "fat line truth table: " + std::to_string(grid) + " grid cells, " +
                         std::to_string(e.violations()) + " violations, " + fmt_s(e.timing_ms)});
  }
  {
    const auto& e = need(fp, "cm-spot");
    lines.push_back({5, e.pass && e.timing_ms < 120000,
                     "Cohen-Macaulay spot checks: " + std::to_string(e.checks.size()) + " checks, " +
                         std::to_string(e.violations()) + " violations, " + fmt_s(e.timing_ms)});
  }
  {
    const auto& split = need(fp, "colon-split");
    const auto& dseq = need(fp, "strong-dseq-colon");
    const auto& mm = need(fp, "m-multiples");
    const auto& rb = need(fp, "rednum-bound");
    auto accepted_split = value_of(split, "instances", "accepted");
    auto accepted_dseq = value_of(dseq, "instances", "accepted");
    std::size_t v = split.violations() + dseq.violations() + mm.violations() + rb.violations();
    bool ok = v == 0 && accepted_split >= 200 && accepted_dseq >= 50;
    lines.push_back({6, ok,
                     "property suites: colon split " + std::to_string(accepted_split) + " instances, strong d-sequence "
                         "colon " + std::to_string(accepted_dseq) + " instances, m-multiples " +
                         std::to_string(mm.checks.size()) + " checks, reduction bound " +
                         std::to_string(rb.checks.size()) + " checks; " + std::to_string(v) + " violations"});
  }
  {
    std::size_t compared = 0, disagree = 0, skipped = 0;
    for (const auto& e : fp.experiments) {
      for (const auto& c : e.checks) {
        if (c.oracle) {
          ++compared;
          if (!c.oracle->agrees) ++disagree;
        }
        for (const auto& n : c.notes) {
          if (n.rfind("oracle skipped", 0) == 0) ++skipped;
        }
      }
    }
    lines.push_back({7, disagree == 0 && compared > 0,
                     "oracle equivalence: " + std::to_string(compared) + " cross-checked, " +
                         std::to_string(disagree) + " disagreements, " + std::to_string(skipped) +
                         " above the truncation cap"});
  }
  {
    const auto& e = need(fp, "index-stability");
    std::map<std::string, unsigned> threes;
    for (const auto& c : e.checks) {
      if (c.operation == "index" && c.get("index") == 3) ++threes[c.ring];
    }
    bool ok = e.pass && threes["semigroup-e3"] >= 20 && threes["fat-line"] >= 20;
    lines.push_back({8, ok,
                     "index of reducibility on Q inside m^3: semigroup e = 3 " + std::to_string(threes["semigroup-e3"]) +
                         " x 3, fat line " + std::to_string(threes["fat-line"]) + " x 3"});
  }
  {
    bool same = to_json_without_timings(fp) == to_json_without_timings(fp2);
    std::string detail = std::string("repeated run identical: ") + (same ? "yes" : "no");
    bool ok = same;
    if (qq) {
      std::size_t mismatched = 0;
      bool qq_pass = true;
      for (const auto& names : kCriterionExperiments) {
        for (const auto& n : names) {
          if (verdicts(need(fp, n)) != verdicts(need(*qq, n))) ++mismatched;
          qq_pass = qq_pass && need(*qq, n).pass;
        }
      }
      ok = ok && mismatched == 0 && qq_pass;
      detail += ", qq against fp:32003: " + std::to_string(mismatched) + " experiments differ, qq run " +
                (qq_pass ? "passes" : "fails");
    } else {
      ok = false;
      detail += ", qq run skipped";
    }
    lines.push_back({9, ok, "determinism: " + detail});
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 1;
  bool skip_qq = false;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_flag("--skip-qq", skip_qq, "do not run over the rationals (criterion 9 then fails)");
  CLI11_PARSE(app, argc, argv);

  RunOptions fp;
  fp.seed = seed;
  RunOptions qq = fp;
  qq.field = Field::rationals();

  try {
    Report a = run_repro(fp);
    Report b = run_repro(fp);
    std::optional<Report> c;
    if (!skip_qq) c = run_repro(qq);
    bool all = true;
    for (const auto& l : evaluate(a, b, c ? &*c : nullptr)) {
      std::printf("criterion %d: %s  %s\n", l.number, l.pass ? "PASS" : "FAIL", l.text.c_str());
      all = all && l.pass;
    }
    std::printf("timings: fp:32003 %s and %s", fmt_s(a.timing_ms).c_str(), fmt_s(b.timing_ms).c_str());
    if (c) std::printf(", qq %s", fmt_s(c->timing_ms).c_str());
    std::printf("\n");
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
}
