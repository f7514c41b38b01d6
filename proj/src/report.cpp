#include "socle/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace socle {

using json = nlohmann::ordered_json;

std::optional<std::int64_t> Check::get(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::size_t ExperimentResult::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

bool Report::pass() const {
  if (error) return false;
  return std::all_of(experiments.begin(), experiments.end(), [](const ExperimentResult& e) { return e.pass; });
}

const ExperimentResult* Report::find(const std::string& name) const {
  for (const auto& e : experiments) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json check_json(const Check& c, bool timings) {
  json j;
  j["operation"] = c.operation;
  j["ring"] = c.ring;
  json in = json::object();
  for (const auto& [k, v] : c.inputs) in[k] = v;
  j["inputs"] = in;
  j["verdict"] = optional_bool(c.verdict);
  j["expected"] = optional_bool(c.expected);
  j["pass"] = c.pass;
  json vals = json::object();
  for (const auto& [k, v] : c.values) vals[k] = v;
  j["values"] = vals;
  j["truncation_level"] = c.level;
  if (c.oracle) {
    j["oracle"] = json{{"agrees", c.oracle->agrees}, {"dim", c.oracle->dim}, {"level", c.oracle->level}};
  } else {
    j["oracle"] = nullptr;
  }
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  j["notes"] = c.notes;
  if (timings) j["timing_ms"] = c.timing_ms;
  return j;
}

json report_json(const Report& r, bool timings) {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = "socle";
  j["version"] = kToolVersion;
  j["seed"] = r.seed;
  j["field"] = r.field;
  j["status"] = r.error ? "error" : (r.pass() ? "pass" : "fail");
  json ex = json::array();
  for (const auto& e : r.experiments) {
    json je;
    je["name"] = e.name;
    je["prediction"] = e.prediction;
    je["status"] = e.pass ? "pass" : "fail";
    je["violations"] = e.violations();
    json cs = json::array();
    for (const auto& c : e.checks) cs.push_back(check_json(c, timings));
    je["checks"] = cs;
    if (timings) je["timing_ms"] = e.timing_ms;
    ex.push_back(je);
  }
  j["experiments"] = ex;
  if (r.error) {
    j["error"] = json{{"kind", r.error->kind}, {"message", r.error->message}};
  } else {
    j["error"] = nullptr;
  }
  if (timings) j["timing_ms"] = r.timing_ms;
  return j;
}

std::string verdict_text(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

}  // namespace

std::string to_json(const Report& r) { return report_json(r, true).dump(2) + "\n"; }

std::string to_json_without_timings(const Report& r) { return report_json(r, false).dump(2) + "\n"; }

std::string to_text(const Report& r) {
  std::ostringstream out;
  if (r.error) {
    out << "error (" << r.error->kind << "): " << r.error->message << "\n";
    return out.str();
  }
  for (const auto& e : r.experiments) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f", e.timing_ms);
    out << "== " << e.name << ": " << (e.pass ? "pass" : "FAIL") << " (" << e.checks.size() << " checks, "
        << e.violations() << " violations, " << ms << " ms)\n";
    for (const auto& c : e.checks) {
      out << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.operation << " [" << c.ring << "]";
      for (const auto& [k, v] : c.inputs) out << " " << k << "=" << v;
      out << " -> " << verdict_text(c.verdict);
      if (c.expected) out << " (expected " << verdict_text(c.expected) << ")";
      for (const auto& [k, v] : c.values) out << " " << k << "=" << v;
      if (c.oracle) out << " oracle=" << (c.oracle->agrees ? "agrees" : "DISAGREES");
      if (c.witness) out << " witness=" << *c.witness;
      for (const auto& n : c.notes) out << " [" << n << "]";
      out << "\n";
    }
  }
  out << "status: " << (r.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace socle
