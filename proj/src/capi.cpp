#include "socle/socle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "socle/commands.hpp"
#include "socle/groebner.hpp"
#include "socle/zoo.hpp"

struct socle_ring {
  socle::NamedRing ring;
};

struct socle_report {
  socle::Report report;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

socle::Field field_of(const char* text) {
  if (!text || !*text) return socle::Field::prime(32003);
  return socle::Field::parse(text);
}

socle::Limits limits_of(const socle_options* o) {
  socle::Limits l;
  if (o && o->step_budget) l.step_budget = o->step_budget;
  if (o && o->trunc_budget) l.trunc_budget = o->trunc_budget;
  return l;
}

socle::CommandOptions command_options(const socle_options* o) {
  socle::CommandOptions c;
  if (o) {
    c.seed = o->seed;
    if (o->oracle_cap) c.oracle_cap = o->oracle_cap;
    if (o->samples) c.samples = o->samples;
  }
  return c;
}

socle::RunOptions run_options(const socle_options* o) {
  socle::RunOptions r;
  if (o) {
    r.field = field_of(o->field);
    r.seed = o->seed;
    if (o->oracle_cap) r.oracle_cap = o->oracle_cap;
    if (o->samples) r.samples = o->samples;
  }
  return r;
}

template <class F>
socle_status guarded(const socle_options* opts, F f) {
  last_error.clear();
  try {
    socle::LimitsScope scope(limits_of(opts));
    f();
    return SOCLE_OK;
  } catch (const socle::BudgetError& e) {
    last_error = e.what();
    return SOCLE_BUDGET_ERROR;
  } catch (const socle::InputError& e) {
    last_error = e.what();
    return SOCLE_INPUT_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SOCLE_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return SOCLE_INTERNAL_ERROR;
  }
}

socle_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SOCLE_INPUT_ERROR;
}

socle_status emit(socle::Report r, socle_report** out) {
  *out = new socle_report{std::move(r)};
  return SOCLE_OK;
}

const char* status_kind(socle_status s) {
  switch (s) {
    case SOCLE_OK: return "none";
    case SOCLE_INPUT_ERROR: return "input";
    case SOCLE_BUDGET_ERROR: return "budget";
    default: return "internal";
  }
}

}  // namespace

extern "C" {

void socle_options_init(socle_options* opts) {
  if (!opts) return;
  opts->field = nullptr;
  opts->seed = 1;
  opts->step_budget = 0;
  opts->trunc_budget = 0;
  opts->oracle_cap = 2000;
  opts->samples = 20;
}

const char* socle_version(void) { return socle::kToolVersion; }

const char* socle_last_error(void) { return last_error.c_str(); }

void socle_string_free(char* s) { std::free(s); }

socle_status socle_ring_parse(const char* text, const char* label, const char* field, socle_ring** out) {
  if (!text) return missing("text");
  if (!out) return missing("out");
  return guarded(nullptr, [&] {
    std::optional<socle::Field> f;
    if (field && *field) f = socle::Field::parse(field);
    *out = new socle_ring{socle::load_ring(text, label ? label : "ring", f)};
  });
}

socle_status socle_ring_zoo(const char* id, const char* field, socle_ring** out) {
  if (!id) return missing("id");
  if (!out) return missing("out");
  return guarded(nullptr, [&] { *out = new socle_ring{socle::zoo_ring(id, field_of(field))}; });
}

socle_status socle_ring_print(const socle_ring* ring, char** out) {
  if (!ring) return missing("ring");
  if (!out) return missing("out");
  return guarded(nullptr, [&] { *out = dup(socle::print_ring_file(ring->ring.file)); });
}

void socle_ring_free(socle_ring* ring) { delete ring; }

socle_status socle_zoo_list(char** out) {
  if (!out) return missing("out");
  return guarded(nullptr, [&] {
    std::string s;
    for (const auto& id : socle::zoo_ids()) {
      s += id + "\t" + socle::build_zoo(id, socle::Field::rationals()).description + "\n";
    }
    *out = dup(s);
  });
}

socle_status socle_experiment_list(char** out) {
  if (!out) return missing("out");
  return guarded(nullptr, [&] {
    std::string s;
    for (const auto& e : socle::experiment_catalog()) s += e.name + "\t" + e.summary + "\n";
    *out = dup(s);
  });
}

socle_status socle_check_i2qi(const socle_ring* ring, const char* q, int expect, const socle_options* opts,
                              socle_report** out) {
  if (!ring) return missing("ring");
  if (!q) return missing("q");
  if (!out) return missing("out");
  std::optional<bool> e;
  if (expect >= 0) e = expect != 0;
  return guarded(opts, [&] { emit(socle::check_i2qi_command(ring->ring, q, e, command_options(opts)), out); });
}

socle_status socle_rednum(const socle_ring* ring, const char* q, unsigned cap, const socle_options* opts,
                          socle_report** out) {
  if (!ring) return missing("ring");
  if (!q) return missing("q");
  if (!out) return missing("out");
  std::optional<unsigned> c;
  if (cap) c = cap;
  return guarded(opts, [&] { emit(socle::rednum_command(ring->ring, q, c, command_options(opts)), out); });
}

socle_status socle_invariants(const socle_ring* ring, const socle_options* opts, socle_report** out) {
  if (!ring) return missing("ring");
  if (!out) return missing("out");
  return guarded(opts, [&] { emit(socle::invariants_command(ring->ring, command_options(opts)), out); });
}

socle_status socle_zoo_verify(const char* id, const socle_options* opts, socle_report** out) {
  if (!id) return missing("id");
  if (!out) return missing("out");
  return guarded(opts, [&] {
    emit(socle::zoo_verify_command(id, field_of(opts ? opts->field : nullptr), command_options(opts)), out);
  });
}

socle_status socle_repro(const char* const* only, size_t n_only, const socle_options* opts, socle_report** out) {
  if (!out) return missing("out");
  if (n_only && !only) return missing("only");
  return guarded(opts, [&] {
    std::vector<std::string> names(only, only + n_only);
    emit(socle::run_repro(run_options(opts), names), out);
  });
}

socle_status socle_verify_colon_split(unsigned instances, const socle_options* opts, socle_report** out) {
  if (!out) return missing("out");
  return guarded(opts, [&] { emit(socle::colon_split_command(instances, run_options(opts)), out); });
}

int socle_report_pass(const socle_report* report) { return report && report->report.pass() ? 1 : 0; }

socle_status socle_report_json(const socle_report* report, int with_timings, char** out) {
  if (!report) return missing("report");
  if (!out) return missing("out");
  return guarded(nullptr, [&] {
    *out = dup(with_timings ? socle::to_json(report->report) : socle::to_json_without_timings(report->report));
  });
}

socle_status socle_report_text(const socle_report* report, char** out) {
  if (!report) return missing("report");
  if (!out) return missing("out");
  return guarded(nullptr, [&] { *out = dup(socle::to_text(report->report)); });
}

void socle_report_free(socle_report* report) { delete report; }

socle_status socle_error_json(socle_status status, const char* message, const socle_options* opts, char** out) {
  if (!out) return missing("out");
  return guarded(nullptr, [&] {
    socle::Report r;
    if (opts) r.seed = opts->seed;
    try {
      r.field = field_of(opts ? opts->field : nullptr).id();
    } catch (const socle::InputError&) {
      r.field = opts && opts->field ? opts->field : "";
    }
    r.error = socle::ReportError{status_kind(status), message ? message : ""};
    *out = dup(socle::to_json(r));
  });
}

}  // extern "C"
