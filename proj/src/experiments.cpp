#include "socle/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "socle/oracle.hpp"
#include "socle/zoo.hpp"

namespace socle {

namespace {

namespace orc = oracle;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// FNV-1a, so that experiment seeds do not depend on the standard library.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string show(const std::vector<Polynomial>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].normalized().to_string();
  return s + ")";
}

std::string show(const Ideal& J) { return show(J.gens()); }

class Run {
public:
  Run(const RunOptions& o, ExperimentResult& r) : opt(o), res(r), rng(o.seed ^ fnv1a(r.name)) {}

  template <class Body>
  Check& check(std::string op, std::string ring, Body body) {
    Check c;
    c.operation = std::move(op);
    c.ring = std::move(ring);
    auto t0 = Clock::now();
    body(c);
    c.timing_ms = ms_since(t0);
    if (c.expected && c.verdict && *c.verdict != *c.expected) c.pass = false;
    if (c.oracle && !c.oracle->agrees) c.pass = false;
    res.checks.push_back(std::move(c));
    return res.checks.back();
  }

  orc::Options oracle() const {
    orc::Options o;
    o.cap = opt.oracle_cap;
    return o;
  }

  // Runs an oracle decision; a truncation above the cap only leaves a note.
  template <class Decide>
  void cross(Check& c, Decide decide) {
    try {
      auto [agrees, a] = decide(oracle());
      c.oracle = OracleRecord{agrees, a.dim, a.level};
    } catch (const BudgetError&) {
      c.notes.push_back("oracle skipped: truncation dimension above " + std::to_string(opt.oracle_cap));
    }
  }

  std::uint64_t draw() { return rng(); }

  const RunOptions& opt;
  ExperimentResult& res;
  std::mt19937_64 rng;
};

void decide(Check& c, bool verdict, std::optional<bool> expected) {
  c.verdict = verdict;
  c.expected = expected;
}

ParamIdeal param(const LocalRing& A, const std::string& text) {
  return ParamIdeal::make(A, parse_polynomial_list(A.ring(), text));
}

Polynomial var(const LocalRing& A, std::size_t i) { return Polynomial::variable(A.ring(), i); }

// I^2 = QI with an oracle cross-check; leaves `expected` to the caller.
LocalVerdict record_i2qi(Run& run, Check& c, const LocalRing& A, const ParamIdeal& Q) {
  auto v = check_i2_eq_qi(A, Q);
  c.inputs.emplace_back("Q", show(Q.gens()));
  for (const auto& [k, x] : v.observed) c.put(k, x);
  c.level = v.level;
  c.verdict = v.answer;
  if (v.witness) c.witness = v.witness->normalized().to_string();
  for (const auto& n : v.notes) c.notes.push_back(n);
  auto index = v.get("index");
  run.cross(c, [&](const orc::Options& o) {
    auto a = orc::i2_eq_qi(A, Q.ideal(), o);
    bool agrees = a.value == v.answer && index && static_cast<std::int64_t>(a.number) == *index;
    return std::make_pair(agrees, a);
  });
  return v;
}

void check_multiplicity(Run& run, const ZooEntry& z, std::uint64_t expected) {
  run.check("multiplicity", z.id, [&](Check& c) {
    auto e = multiplicity(z.ring);
    c.put("e", static_cast<std::int64_t>(e));
    decide(c, e == expected, true);
  });
}

void check_dim(Run& run, const ZooEntry& z, unsigned expected) {
  run.check("dim", z.id, [&](Check& c) {
    auto d = krull_dim(z.ring);
    c.put("dim", d);
    decide(c, d == expected, true);
  });
}

void check_depth(Run& run, const ZooEntry& z, unsigned expected) {
  run.check("depth_probe", z.id, [&](Check& c) {
    auto d = depth_probe(z.ring, run.opt.seed);
    c.put("depth", d);
    decide(c, d == expected, true);
  });
}

void check_h0(Run& run, const ZooEntry& z, const std::vector<Polynomial>& expected, std::uint64_t length) {
  run.check("h0", z.id, [&](Check& c) {
    const LocalRing& A = z.ring;
    auto w = h0(A);
    auto eq = check_equal_local(A, A.ideal(w), A.ideal(expected));
    auto len = h0_length(A);
    c.inputs.emplace_back("expected", show(expected));
    c.put("h0_length", static_cast<std::int64_t>(len));
    if (eq.witness) c.witness = eq.witness->normalized().to_string();
    decide(c, eq.answer && len == length, true);
  });
}

std::vector<ParamIdeal> sampled(Run& run, const LocalRing& A, unsigned count, const std::vector<unsigned>& levels) {
  std::vector<ParamIdeal> out;
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(ParamIdeal::make(A, sample_sop(A, levels[i % levels.size()], run.rng)));
  }
  return out;
}

bool inside_m2(const LocalRing& A, const ParamIdeal& Q) {
  return contains_local(A, Q.ideal(), power(A.maximal(), 2)).answer;
}

// --- experiments ------------------------------------------------------------

void semigroup_chain(Run& run) {
  for (unsigned e : {3u, 4u, 5u}) {
    auto z = build_semigroup(e, run.opt.field);
    const LocalRing& A = z.ring;
    auto x1 = var(A, 0), x2 = var(A, 1), delta = semigroup_delta(z);
    auto Q = ParamIdeal::make(A, {x1});
    Ideal expectedJ = A.ideal({x1, x2, delta});
    check_dim(run, z, 1);
    check_multiplicity(run, z, e);
    check_h0(run, z, {delta}, 1);
    Ideal J = socle_ideal(A, Q);
    run.check("socle_ideal", z.id, [&](Check& c) {
      c.inputs = {{"Q", show(Q.gens())}, {"expected", show(expectedJ)}};
      auto eq = check_equal_local(A, J, expectedJ);
      c.level = eq.level;
      decide(c, eq.answer, true);
      run.cross(c, [&](const orc::Options& o) {
        auto a = orc::socle_matches(A, Q.ideal(), expectedJ, o);
        return std::make_pair(a.value == eq.answer, a);
      });
    });
    run.check("index", z.id, [&](Check& c) {
      c.inputs = {{"Q", show(Q.gens())}};
      auto idx = index_of_reducibility(A, Q);
      c.put("index", static_cast<std::int64_t>(idx));
      decide(c, idx == 2, true);
      run.cross(c, [&](const orc::Options& o) {
        auto a = orc::socle_matches(A, Q.ideal(), J, o);
        return std::make_pair(a.value && a.number == idx, a);
      });
    });
    for (unsigned n : {2u, 3u}) {
      run.check("power_equality", z.id, [&](Check& c) {
        Ideal rhs = power(A.ideal({x1, x2}), n);
        c.inputs = {{"lhs", "J^" + std::to_string(n)}, {"rhs", "(X1, X2)^" + std::to_string(n)}};
        auto eq = check_equal_local(A, power(J, n), rhs);
        c.level = eq.level;
        if (eq.witness) c.witness = eq.witness->normalized().to_string();
        decide(c, eq.answer, true);
        run.cross(c, [&](const orc::Options& o) {
          auto a = orc::equal(A, power(J, n), rhs, o);
          return std::make_pair(a.value == eq.answer, a);
        });
      });
    }
    run.check("element_equality", z.id, [&](Check& c) {
      Polynomial f = x2.pow(e) - x1.pow(e + 1);
      c.inputs = {{"lhs", x2.pow(e).to_string()}, {"rhs", x1.pow(e + 1).to_string()}};
      auto v = contains_local(A, A.ideal({f}), A.ideal({}));
      decide(c, v.answer, true);
    });
    run.check("reduction_number", z.id, [&](Check& c) {
      c.inputs = {{"Q", show(Q.gens())}, {"I", "Q : m"}};
      auto r = reduction_number(A, Q);
      c.put("cap", r.cap);
      if (r.value) c.put("r", *r.value);
      if (r.chain_bound) c.put("chain_bound", *r.chain_bound);
      decide(c, r.value && *r.value == e - 1, true);
      run.cross(c, [&](const orc::Options& o) {
        auto a = orc::reduction_number(A, Q.ideal(), e, o);
        bool agrees = a.has_value() == r.value.has_value() && (!a || a->number == *r.value);
        return std::make_pair(agrees, a.value_or(orc::Answer{}));
      });
    });
    run.check("i2_eq_qi", z.id, [&](Check& c) {
      record_i2qi(run, c, A, Q);
      c.expected = false;
    });
    run.check("type_estimate", z.id, [&](Check& c) {
      auto t = estimate_cm_type(A, 3, run.opt.samples, run.opt.seed + e);
      c.inputs = {{"depth_level", "3"}, {"samples", std::to_string(run.opt.samples)}};
      c.put("max", static_cast<std::int64_t>(t.max));
      c.put("min", static_cast<std::int64_t>(*std::min_element(t.values.begin(), t.values.end())));
      decide(c, t.max == e, true);
    });
  }
}

void principal_criterion(Run& run) {
  auto z = build_almost_dvr(run.opt.field);
  const LocalRing& A = z.ring;
  Polynomial x = var(A, 0), y = var(A, 1);
  check_multiplicity(run, z, 1);
  auto Q = ParamIdeal::make(A, {y.pow(3)});
  run.check("socle_ideal", z.id, [&](Check& c) {
    Ideal expected = A.ideal({x, y.pow(2)});
    c.inputs = {{"Q", show(Q.gens())}, {"expected", show(expected)}};
    auto eq = check_equal_local(A, socle_ideal(A, Q), expected);
    decide(c, eq.answer, true);
    run.cross(c, [&](const orc::Options& o) {
      auto a = orc::socle_matches(A, Q.ideal(), expected, o);
      return std::make_pair(a.value == eq.answer, a);
    });
  });
  run.check("i2_eq_qi", z.id, [&](Check& c) {
    record_i2qi(run, c, A, Q);
    c.expected = false;
  });
  for (unsigned k = 1; k <= 4; ++k) {
    for (int a = 0; a <= 1; ++a) {
      for (int b = 0; b <= 1; ++b) {
        Polynomial f = y.pow(k) + x.scaled(Scalar(A.ring()->field(), a)) +
                       y.pow(k + 1).scaled(Scalar(A.ring()->field(), b));
        auto P = ParamIdeal::make(A, {f});
        run.check("i2_eq_qi", z.id, [&](Check& c) {
          record_i2qi(run, c, A, P);
          bool in_m2 = inside_m2(A, P);
          c.put("q_in_m2", in_m2);
          c.expected = !in_m2;
        });
      }
    }
  }
}

void plane_line_table(Run& run) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"Y", "Z"}, {"Z", "Y^2"}, {"Y^2", "Z^2"}, {"Y^2 - Z^2", "Y*Z"}, {"Y + Z^2", "Z"}};
  for (unsigned l = 1; l <= 3; ++l) {
    auto z = build_plane_line(l, run.opt.field);
    const LocalRing& A = z.ring;
    LocalRing B(A.ring(), {var(A, 0)});
    check_multiplicity(run, z, l);
    check_dim(run, z, 2);
    check_depth(run, z, 1);
    auto judge = [&](Check& c, const ParamIdeal& Q, std::optional<bool> forced) {
      auto v = record_i2qi(run, c, A, Q);
      auto idx = v.get("index").value_or(0);
      if (idx > 2) {
        c.pass = false;
        c.notes.push_back("index above 2");
      }
      bool in_m2 = inside_m2(A, Q);
      c.put("q_in_m2", in_m2);
      std::optional<bool> expected;
      if (l >= 2 || idx == 1) {
        expected = true;
      } else {
        // B = A/(x) is regular, where QB = (QB)# exactly when I_B^2 != QB I_B
        auto vb = check_i2_eq_qi(B, ParamIdeal::make(B, Q.gens()));
        c.put("qb_integrally_closed", vb.answer ? 0 : 1);
        expected = vb.answer;
      }
      if (in_m2 && !v.answer) {
        c.pass = false;
        c.notes.push_back("Q inside m^2 but I^2 != QI");
      }
      if (forced) {
        if (expected != forced) c.notes.push_back("table prediction differs from the stated instance");
        expected = forced;
      }
      c.expected = expected;
    };
    for (unsigned n = 1; n <= 3; ++n) {
      for (const auto& [a, b] : pairs) {
        std::string xn = n == 1 ? "X" : "X^" + std::to_string(n);
        auto gens = parse_polynomial_list(A.ring(), xn + " + " + a + ", " + b);
        if (!is_sop(A, gens).answer) continue;
        auto Q = ParamIdeal::make(A, gens);
        run.check("i2_eq_qi", z.id, [&](Check& c) { judge(c, Q, std::nullopt); });
      }
    }
    if (l == 1) {
      auto Q = param(A, "X - Y, Y^2 - Z^2");
      run.check("i2_eq_qi", z.id, [&](Check& c) { judge(c, Q, false); });
    }
    for (const auto& Q : sampled(run, A, run.opt.samples, {1, 2})) {
      run.check("i2_eq_qi", z.id, [&](Check& c) {
        judge(c, Q, std::nullopt);
        c.notes.push_back("sampled");
      });
    }
  }
}

void fat_line_table(Run& run) {
  auto z = build_fat_line(run.opt.field);
  const LocalRing& A = z.ring;
  check_multiplicity(run, z, 3);
  check_h0(run, z, {var(A, 0).pow(2)}, 1);
  for (const std::string f : {"1", "X", "0"}) {
    for (const std::string g : {"0", "Y", "Z"}) {
      for (unsigned n = 1; n <= 3; ++n) {
        std::string zn = n == 1 ? "Z" : "Z^" + std::to_string(n);
        auto Q = param(A, zn + " + X*(" + f + ") + Y*(" + g + ")");
        bool unit = f == "1";
        run.check("i2_eq_qi", z.id, [&](Check& c) {
          c.inputs.emplace_back("f", f);
          c.inputs.emplace_back("g", g);
          c.inputs.emplace_back("n", std::to_string(n));
          auto v = record_i2qi(run, c, A, Q);
          c.expected = unit || n >= 2;
          if (unit && v.get("index") != 1) {
            c.pass = false;
            c.notes.push_back("index is not 1 for a unit f");
          }
        });
        if (!unit && n == 1) {
          run.check("reduction_number", z.id, [&](Check& c) {
            c.inputs = {{"Q", show(Q.gens())}, {"f", f}, {"g", g}, {"n", "1"}};
            auto r = reduction_number(A, Q);
            if (r.value) c.put("r", *r.value);
            if (r.chain_bound) c.put("chain_bound", *r.chain_bound);
            decide(c, r.value && *r.value == 2, true);
            run.cross(c, [&](const orc::Options& o) {
              auto a = orc::reduction_number(A, Q.ideal(), 3, o);
              bool agrees = a.has_value() == r.value.has_value() && (!a || a->number == *r.value);
              return std::make_pair(agrees, a.value_or(orc::Answer{}));
            });
          });
        }
      }
    }
  }
  for (const auto& Q : sampled(run, A, run.opt.samples, {2})) {
    run.check("i2_eq_qi", z.id, [&](Check& c) {
      record_i2qi(run, c, A, Q);
      c.expected = true;
      c.notes.push_back("sampled inside m^2");
    });
  }
}

void cm_spot(Run& run) {
  auto reg = build_regular(3, run.opt.field);
  for (unsigned q : {2u, 3u}) {
    auto Q = param(reg.ring, "X, Y, Z^" + std::to_string(q));
    run.check("i2_eq_qi", reg.id, [&](Check& c) {
      record_i2qi(run, c, reg.ring, Q);
      c.expected = false;
    });
  }
  run.check("i2_eq_qi", reg.id, [&](Check& c) {
    record_i2qi(run, c, reg.ring, param(reg.ring, "X^2, Y^2, Z^2"));
    c.expected = true;
  });
  auto cone = build_quadric_cone(run.opt.field);
  check_multiplicity(run, cone, 2);
  check_depth(run, cone, 2);
  for (const auto& Q : sampled(run, cone.ring, run.opt.samples, {1, 2})) {
    run.check("i2_eq_qi", cone.id, [&](Check& c) {
      record_i2qi(run, c, cone.ring, Q);
      c.expected = true;
    });
  }
}

std::vector<ZooEntry> entries(const RunOptions& opt, const std::vector<std::string>& ids) {
  std::vector<ZooEntry> out;
  for (const auto& id : ids) out.push_back(build_zoo(id, opt.field));
  return out;
}

// Random element of m: a linear form, sometimes plus a quadratic monomial.
// With nonstandard weights, a weighted-homogeneous combination of the
// variables of one weight instead.
Polynomial random_in_m(Run& run, const LocalRing& A) {
  const auto& R = A.ring();
  const std::size_t n = R->arity();
  auto w = R->weights();
  if (std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) != w.end()) {
    const auto target = w[run.draw() % n];
    Polynomial f(R);
    for (std::size_t i = 0; i < n; ++i) {
      long long c = 1 + static_cast<long long>(run.draw() % 3);
      if (w[i] == target) f = f + Polynomial::variable(R, i).scaled(Scalar(R->field(), c));
    }
    f = A.reduce(f);
    if (!f.is_zero()) return f;
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    Polynomial f(R);
    for (std::size_t i = 0; i < n; ++i) {
      long long c = static_cast<long long>(run.draw() % 5) - 2;
      if (c) f = f + Polynomial::variable(R, i).scaled(Scalar(R->field(), c));
    }
    if (run.draw() % 3 == 0) {
      f = f + Polynomial::variable(R, run.draw() % n) * Polynomial::variable(R, run.draw() % n);
    }
    f = A.reduce(f);
    if (!f.is_zero()) return f;
  }
  return A.reduce(Polynomial::variable(R, 0));
}

std::vector<Polynomial> nonzero_mod(const LocalRing& A, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    auto r = A.reduce(g);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

const std::vector<std::string> kSuiteRings = {"almost-dvr", "fat-line",     "plane-line-l1", "plane-line-l2",
                                              "two-planes", "regular-d2",   "quadric-cone",  "semigroup-e3"};

void colon_split(Run& run) {
  auto zs = entries(run.opt, kSuiteRings);
  unsigned accepted = 0, skipped = 0, attempts = 0;
  const unsigned target = run.opt.split_instances;
  while (accepted < target && attempts < 20 * target) {
    const auto& z = zs[attempts++ % zs.size()];
    const LocalRing& A = z.ring;
    Polynomial x = random_in_m(run, A);
    std::vector<Polynomial> L;
    for (unsigned k = run.draw() % 3; k > 0; --k) L.push_back(random_in_m(run, A));
    std::vector<Polynomial> W;
    switch (run.draw() % 3) {
      case 1:
        W = nonzero_mod(A, colon(A.defining(), x).gens());
        break;
      case 2: {
        auto all = nonzero_mod(A, colon(A.defining(), x).gens());
        if (!all.empty()) W.push_back(all.front());
        break;
      }
      default:
        break;
    }
    Ideal M = A.maximal();
    switch (run.draw() % 3) {
      case 1:
        M = A.ideal({x, random_in_m(run, A)});
        break;
      case 2:
        M = sum(power(A.maximal(), 2), A.ideal({x}));
        break;
      default:
        break;
    }
    unsigned n = 2 + static_cast<unsigned>(run.draw() % 2);
    auto v = verify_colon_split(A, A.ideal(L), x, A.ideal(W), M, n);
    if (v.skipped) {
      ++skipped;
      continue;
    }
    ++accepted;
    run.check("colon_split", z.id, [&](Check& c) {
      c.inputs = {{"L", show(L)}, {"x", x.normalized().to_string()}, {"W", show(W)}, {"M", show(M)},
                  {"n", std::to_string(n)}};
      for (const auto& [k, val] : v.observed) c.put(k, val);
      if (v.witness) c.witness = v.witness->to_string();
      c.notes = v.notes;
      decide(c, v.answer, true);
    });
  }
  run.check("instances", "suite", [&](Check& c) {
    c.put("accepted", accepted);
    c.put("skipped", skipped);
    c.put("required", target);
    decide(c, accepted >= target, true);
  });
}

void strong_dseq_colon(Run& run) {
  auto zs = entries(run.opt, {"regular-d2", "regular-d3", "quadric-cone", "two-planes", "fat-line", "almost-dvr",
                              "semigroup-e3", "plane-line-l2"});
  unsigned accepted = 0, skipped = 0, attempts = 0;
  const unsigned target = run.opt.dseq_instances;
  while (accepted < target && attempts < 20 * target) {
    const auto& z = zs[attempts++ % zs.size()];
    const LocalRing& A = z.ring;
    const auto& R = A.ring();
    std::vector<Polynomial> seq;
    if (run.draw() % 2 == 0) {
      seq = sample_sop(A, 1, run.rng);
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(1 + run.draw() % seq.size()), seq.end());
    } else {
      std::vector<std::size_t> idx(R->arity());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), run.rng);
      idx.resize(1 + run.draw() % std::min<std::size_t>(idx.size(), 3));
      for (auto i : idx) seq.push_back(Polynomial::variable(R, i));
    }
    std::vector<unsigned> exps;
    for (std::size_t i = 0; i < seq.size(); ++i) exps.push_back(2 + static_cast<unsigned>(run.draw() % 2));
    Ideal M = run.draw() % 2 ? A.maximal() : sum(A.ideal(seq), power(A.maximal(), 2));
    auto v = verify_strong_dseq_colon(A, seq, exps, M, 2);
    if (v.skipped) {
      ++skipped;
      continue;
    }
    ++accepted;
    run.check("strong_dseq_colon", z.id, [&](Check& c) {
      std::string e;
      for (auto k : exps) e += (e.empty() ? "" : ",") + std::to_string(k);
      c.inputs = {{"seq", show(seq)}, {"exponents", e}, {"M", show(M)}};
      if (v.witness) c.witness = v.witness->to_string();
      c.notes = v.notes;
      decide(c, v.answer, true);
    });
  }
  run.check("instances", "suite", [&](Check& c) {
    c.put("accepted", accepted);
    c.put("skipped", skipped);
    c.put("required", target);
    decide(c, accepted >= target, true);
  });
}

std::vector<ParamIdeal> canonical_and_sampled(Run& run, const ZooEntry& z, unsigned count,
                                              const std::vector<unsigned>& levels) {
  std::vector<ParamIdeal> out;
  const LocalRing& A = z.ring;
  if (z.id.rfind("semigroup-e", 0) == 0) out.push_back(param(A, "X1"));
  if (z.id == "fat-line") out.push_back(param(A, "Z"));
  for (auto& Q : sampled(run, A, count, levels)) out.push_back(std::move(Q));
  return out;
}

void m_multiples(Run& run) {
  for (const auto& id : {"semigroup-e3", "semigroup-e4", "semigroup-e5", "plane-line-l2", "plane-line-l3", "fat-line",
                         "two-planes", "quadric-cone"}) {
    auto z = build_zoo(id, run.opt.field);
    const LocalRing& A = z.ring;
    std::vector<unsigned> levels = z.multiplicity >= 5 ? std::vector<unsigned>{1} : std::vector<unsigned>{1, 2};
    for (const auto& Q : canonical_and_sampled(run, z, 2, levels)) {
      run.check("m_multiples", z.id, [&](Check& c) {
        c.inputs = {{"Q", show(Q.gens())}};
        auto v = m_multiples_check(A, Q);
        for (const auto& [k, x] : v.observed) c.put(k, x);
        c.level = v.level;
        if (v.witness) c.witness = v.witness->to_string();
        decide(c, v.answer, true);
        Ideal I = socle_ideal(A, Q);
        run.cross(c, [&](const orc::Options& o) {
          auto a = orc::equal(A, product(A.maximal(), I), product(A.maximal(), Q.ideal()), o);
          return std::make_pair(a.value == (v.get("m_i1_eq_m_q1") == 1), a);
        });
      });
    }
  }
  auto cp = build_almost_dvr(run.opt.field);
  run.check("m_multiples", cp.id, [&](Check& c) {
    auto Q = param(cp.ring, "Y^3");
    c.inputs = {{"Q", show(Q.gens())}};
    auto v = m_multiples_check(cp.ring, Q);
    for (const auto& [k, x] : v.observed) c.put(k, x);
    decide(c, v.answer, false);
    c.notes.push_back("multiplicity one: no prediction of equality");
  });
}

void rednum_bound(Run& run) {
  for (const auto& id : {"semigroup-e3", "semigroup-e4", "semigroup-e5", "fat-line"}) {
    auto z = build_zoo(id, run.opt.field);
    const LocalRing& A = z.ring;
    const auto e = z.multiplicity;
    Ideal W = A.ideal(h0(A));
    std::vector<Polynomial> mg = A.maximal().gens();
    unsigned attained = 0;
    for (const auto& Q : canonical_and_sampled(run, z, run.opt.samples, {1, 2, 3})) {
      run.check("reduction_bound", z.id, [&](Check& c) {
        c.inputs = {{"Q", show(Q.gens())}};
        auto r = reduction_number(A, Q);
        Ideal QW = sum(Q.ideal(), W);
        auto artQW = Artinian::of(A, QW);
        auto colQW = A.ideal(artQW->colon(mg));
        std::uint64_t lenQW = artQW->length();
        std::uint64_t lenCol = Artinian::of(A, colQW)->length();
        std::uint64_t lenI = Artinian::of(A, socle_ideal(A, Q))->length();
        auto rAW = static_cast<std::int64_t>(lenQW - lenCol);
        auto lIQW = static_cast<std::int64_t>(lenQW - lenI);
        std::int64_t bound = rAW - lIQW + 1;
        c.put("r_A_mod_W", rAW);
        c.put("l_I_mod_QW", lIQW);
        c.put("bound", bound);
        c.put("e_minus_1", static_cast<std::int64_t>(e - 1));
        if (r.value) c.put("r", *r.value);
        if (r.chain_bound) c.put("chain_bound", *r.chain_bound);
        // I = Q + W forces I^2 = Q^2 = QI, since mW = 0
        bool ok = r.value && static_cast<std::int64_t>(*r.value) <= bound &&
                  (lIQW > 0 ? bound <= static_cast<std::int64_t>(e - 1) : *r.value <= 1);
        if (r.value) attained = std::max(attained, *r.value);
        decide(c, ok, true);
        run.cross(c, [&](const orc::Options& o) {
          auto a = orc::reduction_number(A, Q.ideal(), static_cast<unsigned>(e), o);
          bool agrees = a.has_value() == r.value.has_value() && (!a || a->number == *r.value);
          return std::make_pair(agrees, a.value_or(orc::Answer{}));
        });
      });
    }
    run.check("bound_attained", z.id, [&](Check& c) {
      c.put("max_r", attained);
      decide(c, attained == e - 1, true);
    });
  }
}

void index_stability(Run& run) {
  for (const auto& id : {"semigroup-e3", "fat-line"}) {
    auto z = build_zoo(id, run.opt.field);
    const LocalRing& A = z.ring;
    for (const auto& Q : sampled(run, A, run.opt.samples, {3})) {
      run.check("index", z.id, [&](Check& c) {
        c.inputs = {{"Q", show(Q.gens())}};
        auto idx = index_of_reducibility(A, Q);
        c.put("index", static_cast<std::int64_t>(idx));
        decide(c, idx == 3, true);
        Ideal I = socle_ideal(A, Q);
        run.cross(c, [&](const orc::Options& o) {
          auto a = orc::socle_matches(A, Q.ideal(), I, o);
          return std::make_pair(a.value && a.number == idx, a);
        });
      });
    }
  }
}

std::vector<Polynomial> powers_of(const std::vector<Polynomial>& xs, const std::vector<unsigned>& ns) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(xs[i].pow(ns[i]));
  return out;
}

std::string show_exps(const std::vector<unsigned>& ns) {
  std::string s;
  for (auto n : ns) s += (s.empty() ? "" : ",") + std::to_string(n);
  return s;
}

void power_exponents(Run& run) {
  struct Case {
    std::string id;
    std::vector<std::vector<unsigned>> exps;
    std::optional<bool> expected;
    std::string why;
  };
  const std::vector<Case> cases = {
      {"fat-line", {{2}, {3}}, true, "e > 1, some exponent >= 2"},
      {"semigroup-e3", {{2}, {3}}, true, "e > 1, some exponent >= 2"},
      {"two-planes", {{2, 1}, {1, 2}, {2, 2}}, true, "e > 1, some exponent >= 2"},
      {"quadric-cone", {{2, 1}, {1, 2}, {2, 2}}, true, "e > 1, some exponent >= 2"},
      {"regular-d2", {{2, 2}}, true, "two exponents >= 2"},
      {"regular-d3", {{2, 2, 1}, {1, 2, 2}}, true, "two exponents >= 2"},
      {"regular-d2", {{1, 2}}, false, "regular ring, Q = (a1, a2^q)"},
  };
  for (const auto& k : cases) {
    auto z = build_zoo(k.id, run.opt.field);
    const LocalRing& A = z.ring;
    for (int s = 0; s < 2; ++s) {
      auto xs = sample_sop(A, 1, run.rng);
      for (const auto& ns : k.exps) {
        auto Q = ParamIdeal::make(A, powers_of(xs, ns));
        run.check("i2_eq_qi", z.id, [&](Check& c) {
          c.inputs.emplace_back("sop", show(xs));
          c.inputs.emplace_back("exponents", show_exps(ns));
          record_i2qi(run, c, A, Q);
          c.expected = k.expected;
          c.notes.push_back(k.why);
        });
      }
    }
  }
}

void squared_dseq(Run& run) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"regular-d2", "X, Y"}, {"regular-d3", "X, Y, Z"}, {"quadric-cone", "X, Y"}, {"two-planes", "X - Z, Y - W"}};
  for (const auto& [id, ys] : cases) {
    auto z = build_zoo(id, run.opt.field);
    const LocalRing& A = z.ring;
    auto y = parse_polynomial_list(A.ring(), ys);
    run.check("strong_d_sequence", z.id, [&](Check& c) {
      c.inputs = {{"seq", show(y)}, {"exponent_bound", "2"}};
      auto v = is_strong_d_sequence(A, y, 2);
      bool sop = is_sop(A, y).answer;
      if (v.witness) c.witness = v.witness->to_string();
      decide(c, v.answer && sop, true);
    });
    std::vector<Polynomial> x;
    for (const auto& p : y) x.push_back(p.pow(2));
    const std::size_t d = y.size();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<unsigned> ns;
      for (std::size_t i = 0; i < d; ++i) ns.push_back(1 + ((mask >> i) & 1u));
      auto Q = ParamIdeal::make(A, powers_of(x, ns));
      run.check("i2_eq_qi", z.id, [&](Check& c) {
        c.inputs.emplace_back("exponents", show_exps(ns));
        record_i2qi(run, c, A, Q);
        c.expected = true;
      });
    }
  }
}

void max_index(Run& run) {
  for (const auto& id : {"semigroup-e3", "semigroup-e4", "fat-line", "quadric-cone"}) {
    auto z = build_zoo(id, run.opt.field);
    const LocalRing& A = z.ring;
    const auto type = z.type.value();
    unsigned hits = 0;
    for (const auto& Q : sampled(run, A, run.opt.samples / 2, {1, 2, 3})) {
      run.check("i2_eq_qi", z.id, [&](Check& c) {
        auto v = record_i2qi(run, c, A, Q);
        c.put("r_A", static_cast<std::int64_t>(type));
        if (v.get("index") == static_cast<std::int64_t>(type)) {
          ++hits;
          c.expected = true;
        }
      });
    }
    run.check("maximal_index_seen", z.id, [&](Check& c) {
      c.put("hits", hits);
      decide(c, hits > 0, true);
    });
  }
}

struct Entry {
  ExperimentInfo info;
  void (*body)(Run&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"semigroup-chain",
        "semigroup rings e = 3, 4, 5: dim 1, H0 = (D) of length 1, (x1) : m = (x1, x2, D) of index 2, "
        "J^n = (x1, x2)^n for n = 2, 3, x2^e = x1^(e+1), r = e - 1, multiplicity e, type estimate e"},
       semigroup_chain},
      {{"principal-criterion",
        "k[X,Y]/(X^2, XY): Q = (y^3) gives I = (x, y^2) and I^2 != QI; for principal Q, I^2 = QI exactly when Q "
        "is not inside m^2"},
       principal_criterion},
      {{"plane-line-table",
        "k[X,Y,Z]/(X^l*Y, X^l*Z): e = l, dim 2, depth 1, l(I/Q) <= 2; I^2 = QI if l >= 2; for l = 1, I^2 = QI "
        "iff l(I/Q) = 1 or QB is not integrally closed in B = A/(x); always when Q is inside m^2"},
       plane_line_table},
      {{"fat-line-table",
        "k[X,Y,Z]/(X^3, XY, Y^2 - XZ), Q = (z^n + x*f + y*g): I^2 = QI with index 1 for a unit f, I^2 = QI for f "
        "in m and n >= 2, reduction number exactly 2 for f in m and n = 1; I^2 = QI whenever Q is inside m^2"},
       fat_line_table},
      {{"cm-spot",
        "Cohen-Macaulay rings: k[X,Y,Z] with Q = (X, Y, Z^q) gives I^2 != QI; in k[X,Y,Z]/(XY - Z^2), I^2 = QI "
        "for every sampled Q"},
       cm_spot},
      {{"colon-split",
        "(L + (x^n) + W) : M = [(L + W) : M] + [(L + (x^n)) : M] when L : x^2 = L : x, xW = 0, x in M, n >= 2; "
        "and = (L + (x^n)) : M when also L : x = L : M"},
       colon_split},
      {{"strong-dseq-colon",
        "strong d-sequence x1..xs inside M, W = 0 : (x1..xs), all n_i >= 2: "
        "[(x1^n1..xs^ns) + W] : M = W + [(x1^n1..xs^ns) : M]"},
       strong_dseq_colon},
      {{"m-multiples", "e(A) > 1: mI inside mQ and mI^n = mQ^n for n = 1..4"}, m_multiples},
      {{"rednum-bound",
        "Buchsbaum, dim 1, e > 1: r_Q(I) <= r(A/W) - l(I/(Q + W)) + 1, which is at most e - 1 when I != Q + W, "
        "and r_Q(I) <= 1 when I = Q + W; the value e - 1 is attained"},
       rednum_bound},
      {{"index-stability", "Q inside m^3 in the semigroup ring e = 3 and the fat line: index of reducibility 3"},
       index_stability},
      {{"power-exponents",
        "Buchsbaum A, Q = (x1^n1..xd^nd): I^2 = QI if e(A) > 1 and some n_i >= 2, or if d >= 2 and two n_i >= 2"},
       power_exponents},
      {{"squared-dseq",
        "unmixed A, d >= 2, y a strong d-sequence system of parameters, x_i = y_i^2: I^2 = QI for "
        "Q = (x1^n1..xd^nd), all n_i >= 1"},
       squared_dseq},
      {{"max-index", "Buchsbaum A with e(A) > 1: I^2 = QI whenever l(I/Q) = r(A)"}, max_index},
  };
  return r;
}

}  // namespace

std::vector<ExperimentInfo> experiment_catalog() {
  std::vector<ExperimentInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

ExperimentResult run_experiment(const std::string& name, const RunOptions& opts) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    ExperimentResult res;
    res.name = name;
    res.prediction = e.info.summary;
    Run run(opts, res);
    auto t0 = Clock::now();
    e.body(run);
    res.timing_ms = ms_since(t0);
    res.pass = res.violations() == 0;
    return res;
  }
  throw InputError("unknown experiment: " + name);
}

Report run_repro(const RunOptions& opts, const std::vector<std::string>& only) {
  Report r;
  r.seed = opts.seed;
  r.field = opts.field.id();
  for (const auto& n : only) {
    bool known = std::any_of(registry().begin(), registry().end(), [&](const Entry& e) { return e.info.name == n; });
    if (!known) throw InputError("unknown experiment: " + n);
  }
  auto t0 = Clock::now();
  for (const auto& e : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.info.name) == only.end()) continue;
    r.experiments.push_back(run_experiment(e.info.name, opts));
  }
  r.timing_ms = ms_since(t0);
  return r;
}

}  // namespace socle
