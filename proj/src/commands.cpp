#include "socle/commands.hpp"

#include <chrono>

#include "socle/oracle.hpp"
#include "socle/zoo.hpp"

namespace socle {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string show(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].normalized().to_string();
  return s + ")";
}

Report single(const std::string& name, const std::string& what, const Field& field, std::uint64_t seed) {
  Report r;
  r.seed = seed;
  r.field = field.id();
  ExperimentResult e;
  e.name = name;
  e.prediction = what;
  r.experiments.push_back(std::move(e));
  return r;
}

template <class Body>
void add_check(Report& r, std::string op, const std::string& ring, Body body) {
  Check c;
  c.operation = std::move(op);
  c.ring = ring;
  auto t0 = Clock::now();
  body(c);
  c.timing_ms = ms_since(t0);
  if (c.expected && c.verdict && *c.expected != *c.verdict) c.pass = false;
  if (c.oracle && !c.oracle->agrees) c.pass = false;
  auto& e = r.experiments.back();
  e.timing_ms += c.timing_ms;
  e.checks.push_back(std::move(c));
  e.pass = e.violations() == 0;
  r.timing_ms = e.timing_ms;
}

oracle::Options oracle_options(const CommandOptions& opts) {
  oracle::Options o;
  o.cap = opts.oracle_cap;
  return o;
}

void oracle_skipped(Check& c, const CommandOptions& opts) {
  c.notes.push_back("oracle skipped: truncation dimension above " + std::to_string(opts.oracle_cap));
}

}  // namespace

NamedRing load_ring(const std::string& text, const std::string& label, const std::optional<Field>& field) {
  RingFile file = parse_ring_file(text);
  if (field && !(file.ring->field() == *field)) {
    std::string printed = print_ring_file(file);
    auto eol = printed.find('\n');
    std::string head = field->is_rational() ? "field QQ" : "field FP " + std::to_string(field->modulus());
    file = parse_ring_file(head + printed.substr(eol));
  }
  LocalRing A = LocalRing::from_file(file);
  return NamedRing{label, std::move(file), std::move(A)};
}

NamedRing zoo_ring(const std::string& id, const Field& field) {
  ZooEntry z = build_zoo(id, field);
  RingFile file{z.ring.ring(), z.ring.defining().gens(), {}};
  return NamedRing{id, std::move(file), z.ring};
}

std::vector<Polynomial> resolve_ideal(const NamedRing& ring, const std::string& text) {
  if (const NamedIdeal* named = ring.file.find(text)) return named->gens;
  return parse_polynomial_list(ring.file.ring, text);
}

Report check_i2qi_command(const NamedRing& ring, const std::string& q, std::optional<bool> expect,
                          const CommandOptions& opts) {
  const LocalRing& A = ring.local;
  Report r = single("check-i2qi", "I^2 = QI for I = Q : m", A.ring()->field(), opts.seed);
  auto Q = ParamIdeal::make(A, resolve_ideal(ring, q));
  add_check(r, "i2_eq_qi", ring.label, [&](Check& c) {
    auto v = check_i2_eq_qi(A, Q);
    c.inputs.emplace_back("Q", show(Q.gens()));
    c.inputs.emplace_back("I", show(socle_ideal(A, Q).gens()));
    for (const auto& [k, x] : v.observed) c.put(k, x);
    c.level = v.level;
    c.verdict = v.answer;
    c.expected = expect;
    if (v.witness) c.witness = v.witness->normalized().to_string();
    c.notes = v.notes;
    try {
      auto a = oracle::i2_eq_qi(A, Q.ideal(), oracle_options(opts));
      auto index = v.get("index");
      bool agrees = a.value == v.answer && index && static_cast<std::int64_t>(a.number) == *index;
      c.oracle = OracleRecord{agrees, a.dim, a.level};
    } catch (const BudgetError&) {
      oracle_skipped(c, opts);
    }
  });
  return r;
}

Report rednum_command(const NamedRing& ring, const std::string& q, std::optional<unsigned> cap,
                      const CommandOptions& opts) {
  const LocalRing& A = ring.local;
  Report r = single("rednum", "least n with I^(n+1) = Q I^n for I = Q : m", A.ring()->field(), opts.seed);
  auto Q = ParamIdeal::make(A, resolve_ideal(ring, q));
  add_check(r, "reduction_number", ring.label, [&](Check& c) {
    auto red = reduction_number(A, Q, cap);
    c.inputs.emplace_back("Q", show(Q.gens()));
    c.put("cap", red.cap);
    if (red.value) c.put("r", *red.value);
    if (red.chain_bound) c.put("chain_bound", *red.chain_bound);
    for (std::size_t i = 0; i < red.chain_colengths.size(); ++i) {
      c.put("chain_colength_" + std::to_string(i), static_cast<std::int64_t>(red.chain_colengths[i]));
    }
    c.verdict = red.value.has_value();
    if (!red.value) c.notes.push_back("no n up to the cap works");
    try {
      auto a = oracle::reduction_number(A, Q.ideal(), red.cap, oracle_options(opts));
      bool agrees = a.has_value() == red.value.has_value() && (!a || a->number == *red.value);
      auto ans = a.value_or(oracle::Answer{});
      c.oracle = OracleRecord{agrees, ans.dim, ans.level};
    } catch (const BudgetError&) {
      oracle_skipped(c, opts);
    }
  });
  return r;
}

Report invariants_command(const NamedRing& ring, const CommandOptions& opts) {
  const LocalRing& A = ring.local;
  Report r = single("invariants", "dim, multiplicity, H0, depth probe, type estimate", A.ring()->field(), opts.seed);
  add_check(r, "dim", ring.label, [&](Check& c) { c.put("dim", krull_dim(A)); });
  add_check(r, "multiplicity", ring.label,
            [&](Check& c) { c.put("e", static_cast<std::int64_t>(multiplicity(A))); });
  add_check(r, "h0", ring.label, [&](Check& c) {
    c.inputs.emplace_back("H0", show(h0(A)));
    c.put("h0_length", static_cast<std::int64_t>(h0_length(A)));
  });
  add_check(r, "depth_probe", ring.label, [&](Check& c) { c.put("depth", depth_probe(A, opts.seed)); });
  add_check(r, "type_estimate", ring.label, [&](Check& c) {
    auto t = estimate_cm_type(A, 3, opts.samples, opts.seed);
    c.inputs.emplace_back("depth_level", "3");
    c.inputs.emplace_back("samples", std::to_string(opts.samples));
    c.put("max", static_cast<std::int64_t>(t.max));
  });
  return r;
}

Report zoo_verify_command(const std::string& id, const Field& field, const CommandOptions& opts) {
  ZooEntry z = build_zoo(id, field);
  const LocalRing& A = z.ring;
  Report r = single("zoo-build", z.description, field, opts.seed);
  auto expect_eq = [&](Check& c, const std::string& key, std::int64_t got, std::int64_t want) {
    c.put(key, got);
    c.put("recorded", want);
    c.verdict = got == want;
    c.expected = true;
  };
  add_check(r, "dim", id, [&](Check& c) { expect_eq(c, "dim", krull_dim(A), z.dim); });
  add_check(r, "multiplicity", id, [&](Check& c) {
    expect_eq(c, "e", static_cast<std::int64_t>(multiplicity(A)), static_cast<std::int64_t>(z.multiplicity));
  });
  add_check(r, "h0", id, [&](Check& c) {
    std::vector<Polynomial> recorded;
    for (const auto& s : z.h0) recorded.push_back(parse_polynomial(A.ring(), s));
    auto w = h0(A);
    c.inputs.emplace_back("recorded", show(recorded));
    c.inputs.emplace_back("computed", show(w));
    c.verdict = equal_as_S_ideals(A.lift(A.ideal(w)), A.lift(A.ideal(recorded)));
    c.expected = true;
  });
  if (z.depth) {
    add_check(r, "depth_probe", id, [&](Check& c) { expect_eq(c, "depth", depth_probe(A, opts.seed), *z.depth); });
  }
  return r;
}

Report colon_split_command(unsigned instances, const RunOptions& opts) {
  RunOptions o = opts;
  o.split_instances = instances;
  Report r;
  r.seed = o.seed;
  r.field = o.field.id();
  auto t0 = Clock::now();
  r.experiments.push_back(run_experiment("colon-split", o));
  r.timing_ms = ms_since(t0);
  return r;
}

}  // namespace socle
