#include "socle/groebner.hpp"

#include <algorithm>
#include <limits>

#include "kernels.hpp"

namespace socle {

Limits& limits() {
  thread_local Limits l;
  return l;
}

namespace {

using detail::terms_of;
using detail::Val;

constexpr std::uint32_t kVirtual = std::numeric_limits<std::uint32_t>::max();

/// All monomials of total degree exactly `deg` in the first n variables.
void monomials_of_degree(std::size_t n, std::uint32_t deg, std::vector<Monomial>& out) {
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      cur.exp[var] = static_cast<Exponent>(left);
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur.exp[var] = static_cast<Exponent>(e);
      self(self, var + 1, left - e);
    }
    cur.exp[var] = 0;
  };
  if (n == 0) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  rec(rec, 0, deg);
}

template <class Ops>
class Engine {
public:
  using V = Val<Ops>;
  using T = Terms<V>;

  Engine(const Ring& R, Ops ops, std::uint32_t trunc) : R_(R), ops_(ops), trunc_(trunc) {}

  std::vector<T> run(std::vector<T> inputs) {
    for (auto& f : inputs) {
      T h = reduce_full(std::move(f), kNone);
      if (h.empty()) continue;
      detail::make_monic(ops_, h);
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      std::pop_heap(pairs_.begin(), pairs_.end(), PairAfter{&R_});
      Pair p = pairs_.back();
      pairs_.pop_back();
      T s;
      const T& f = polys_[p.i];
      if (p.j == kVirtual) {
        s = detail::axpy(R_, ops_, T{}, ops_.one(), quotient(p.lcm, f.mon[0]), f, trunc_);
      } else {
        const T& g = polys_[p.j];
        T uf = detail::axpy(R_, ops_, T{}, ops_.one(), quotient(p.lcm, f.mon[0]), f, trunc_);
        s = detail::axpy(R_, ops_, uf, ops_.neg(ops_.one()), quotient(p.lcm, g.mon[0]), g, trunc_);
      }
      T h = reduce_full(std::move(s), kNone);
      if (h.empty()) continue;
      detail::make_monic(ops_, h);
      update(std::move(h));
    }
    std::vector<T> out;
    for (std::size_t gi : G_) {
      T g = polys_[gi];
      T r = reduce_full(std::move(g), gi);
      detail::make_monic(ops_, r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const T& a, const T& b) { return R_.compare(a.mon[0], b.mon[0]) > 0; });
    return out;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Pair {
    Monomial lcm;
    std::uint32_t i, j;
  };
  struct PairAfter {
    const Ring* R;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.weighted != b.lcm.weighted) return a.lcm.weighted > b.lcm.weighted;
      if (int c = R->compare(a.lcm, b.lcm)) return c > 0;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };

  void tick() {
    if (++steps_ > limits().step_budget) {
      throw BudgetError("Groebner basis step budget of " + std::to_string(limits().step_budget) + " exceeded");
    }
  }

  std::size_t find_reducer(const Monomial& m, std::size_t skip) const {
    for (std::size_t gi : G_) {
      if (gi != skip && divides(polys_[gi].mon[0], m)) return gi;
    }
    return kNone;
  }

  T reduce_full(T h, std::size_t skip) {
    T out;
    std::size_t pos = 0;
    while (pos < h.size()) {
      std::size_t gi = find_reducer(h.mon[pos], skip);
      if (gi == kNone) {
        out.push(h.mon[pos], h.coef[pos]);
        ++pos;
        continue;
      }
      tick();
      const T& g = polys_[gi];
      V c = ops_.neg(h.coef[pos]);
      h = detail::axpy(R_, ops_, h, c, quotient(h.mon[pos], g.mon[0]), g, trunc_, pos);
      pos = 0;
    }
    return out;
  }

  void update(T h) {
    const std::uint32_t t = static_cast<std::uint32_t>(polys_.size());
    const Monomial lh = h.mon[0];
    polys_.push_back(std::move(h));
    const auto w = R_.weights();

    std::vector<Pair> C;
    for (std::size_t gi : G_) C.push_back({lcm(polys_[gi].mon[0], lh, w), static_cast<std::uint32_t>(gi), t});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(polys_[p.i].mon[0], lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (divides(C[b].lcm, p.lcm)) keep = false;
        }
        for (const Pair& q : D) {
          if (!keep) break;
          if (divides(q.lcm, p.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const Pair& p : D) {
      if (!coprime(polys_[p.i].mon[0], lh)) E.push_back(p);
    }
    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      if (p.j != kVirtual && divides(lh, p.lcm)) {
        Monomial l1 = lcm(polys_[p.i].mon[0], lh, w);
        Monomial l2 = lcm(polys_[p.j].mon[0], lh, w);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    for (const Pair& p : E) {
      if (trunc_ && p.lcm.total >= trunc_) continue;
      kept.push_back(p);
    }
    if (trunc_) add_virtual_pairs(t, kept);
    pairs_ = std::move(kept);
    std::make_heap(pairs_.begin(), pairs_.end(), PairAfter{&R_});

    std::vector<std::size_t> G2;
    for (std::size_t gi : G_) {
      if (!divides(lh, polys_[gi].mon[0])) G2.push_back(gi);
    }
    G2.push_back(t);
    G_ = std::move(G2);
  }

  /// u * h for deg u = trunc - deg lt(h), needed only when h has terms
  /// below its lead degree.
  void add_virtual_pairs(std::uint32_t t, std::vector<Pair>& into) {
    const T& h = polys_[t];
    const std::uint32_t D = h.mon[0].total;
    bool low = false;
    for (const auto& m : h.mon) low = low || m.total < D;
    if (!low) return;
    std::vector<Monomial> us;
    monomials_of_degree(R_.arity(), trunc_ - D, us);
    const auto w = R_.weights();
    for (auto& u : us) {
      u.total = trunc_ - D;
      u.weighted = 0;
      for (std::size_t i = 0; i < R_.arity(); ++i) u.weighted += u.exp[i] * w[i];
      into.push_back({u * h.mon[0], t, kVirtual});
    }
  }

  const Ring& R_;
  Ops ops_;
  std::uint32_t trunc_;
  std::uint64_t steps_ = 0;
  std::vector<T> polys_;
  std::vector<std::size_t> G_;
  std::vector<Pair> pairs_;
};

std::vector<Polynomial> run_engine(const RingPtr& R, const std::vector<Polynomial>& gens, std::uint32_t trunc) {
  return detail::with_ops(R->field(), [&](auto ops) {
    using Ops = decltype(ops);
    std::vector<Terms<Val<Ops>>> in;
    for (const auto& g : gens) {
      if (!(g.ring()->spec() == R->spec())) throw InputError("generator lives in a different ring");
      Polynomial p = g.ring()->same_as(*R) ? g : g.in_ring(R);
      if (trunc) p = p.truncated(trunc);
      if (!p.is_zero()) in.push_back(terms_of<Ops>(p.data()));
    }
    Engine<Ops> eng(*R, ops, trunc);
    std::vector<Polynomial> out;
    for (auto& t : eng.run(std::move(in))) out.emplace_back(R, std::move(t));
    return out;
  });
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, std::uint32_t trunc) {
  const RingPtr& R = f.ring();
  return detail::with_ops(R->field(), [&](auto ops) {
    using Ops = decltype(ops);
    using T = Terms<Val<Ops>>;
    std::vector<const T*> bs;
    std::vector<Val<Ops>> inv;
    for (const auto& b : basis) {
      require_same_ring(*R, *b.ring());
      if (b.is_zero()) continue;
      bs.push_back(&terms_of<Ops>(b.data()));
      inv.push_back(ops.inv(bs.back()->coef[0]));
    }
    T h = terms_of<Ops>(f.data());
    if (trunc) h = terms_of<Ops>(f.truncated(trunc).data());
    T out;
    std::size_t pos = 0;
    std::uint64_t steps = 0;
    while (pos < h.size()) {
      std::size_t k = 0;
      while (k < bs.size() && !divides(bs[k]->mon[0], h.mon[pos])) ++k;
      if (k == bs.size()) {
        out.push(h.mon[pos], h.coef[pos]);
        ++pos;
        continue;
      }
      if (++steps > limits().step_budget) throw BudgetError("normal form step budget exceeded");
      auto c = ops.neg(ops.mul(h.coef[pos], inv[k]));
      h = detail::axpy(*R, ops, h, c, quotient(h.mon[pos], bs[k]->mon[0]), *bs[k], trunc, pos);
      pos = 0;
    }
    return Polynomial(R, std::move(out));
  });
}

std::vector<Polynomial> groebner_basis(const RingPtr& R, const std::vector<Polynomial>& gens) {
  auto basis = run_engine(R, gens, 0);
  for (const auto& g : gens) {
    Polynomial p = g.ring()->same_as(*R) ? g : g.in_ring(R);
    if (!reduce(p, basis).is_zero()) throw std::logic_error("Groebner basis does not contain an input generator");
  }
  return basis;
}

RingPtr unit_grevlex(const Ring& R) {
  RingSpec s = R.spec();
  s.weights.assign(s.names.size(), 1);
  return Ring::make(std::move(s), MonomialOrder::grevlex());
}

bool TruncatedBasis::is_unit() const {
  return std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
}

TruncatedBasis truncated_basis(const RingPtr& R, const std::vector<Polynomial>& gens, std::uint32_t K) {
  if (K == 0) throw std::invalid_argument("truncation level must be positive");
  TruncatedBasis tb;
  tb.ring = unit_grevlex(*R);
  tb.level = K;
  std::vector<Polynomial> in;
  std::vector<std::size_t> id(R->arity());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  for (const auto& g : gens) in.push_back(g.mapped(tb.ring, id));
  tb.basis = run_engine(tb.ring, in, K);
  for (const auto& b : tb.basis) tb.leads.push_back(b.lead_monomial());
  return tb;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t arity, std::uint32_t K,
                                         std::size_t cap) {
  std::vector<Monomial> out;
  if (K == 0) return out;
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads) {
      bool div = l.total <= m.total;
      for (std::size_t i = 0; i < arity && div; ++i) div = l.exp[i] <= m.exp[i];
      if (div) return false;
    }
    return true;
  };
  std::vector<std::pair<Monomial, std::size_t>> level;
  Monomial one;
  if (!standard(one)) return out;
  level.push_back({one, 0});
  out.push_back(one);
  for (std::uint32_t d = 1; d < K && !level.empty(); ++d) {
    std::vector<std::pair<Monomial, std::size_t>> next;
    for (const auto& [m, last] : level) {
      for (std::size_t i = last; i < arity; ++i) {
        Monomial c = m;
        ++c.exp[i];
        ++c.total;
        if (!standard(c)) continue;
        next.push_back({c, i});
        out.push_back(c);
        if (out.size() > cap) throw BudgetError("standard monomial count exceeds " + std::to_string(cap));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::uint64_t count_standard_monomials(const std::vector<Monomial>& leads, std::size_t arity, std::uint32_t K,
                                       std::uint64_t cap) {
  return standard_monomials(leads, arity, K, cap).size();
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  std::vector<Polynomial> seen;
  for (auto& g : gens) {
    if (!(g.ring()->spec() == ring_->spec())) throw InputError("generator lives in a different ring");
    if (g.is_zero()) continue;
    Polynomial p = g.ring()->same_as(*ring_) ? g : g.in_ring(ring_);
    Polynomial m = p.monic();
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    gens_.push_back(std::move(p));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(ring, {one});
}

const std::vector<Polynomial>& Ideal::basis() const {
  return basis(ring_->order());
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  RingPtr R = order == ring_->order() ? ring_ : ring_->with_order(order);
  auto computed = std::make_shared<const std::vector<Polynomial>>(groebner_basis(R, gens_));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(order, computed);
  return *it->second;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  return reduce(f, basis());
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& o) const {
  for (const auto& g : o.gens()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].lead_monomial().is_one();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].normalized().to_string();
  }
  return s + ")";
}

Ideal eliminate(const Ideal& J, const std::vector<std::size_t>& keep) {
  const Ring& R = *J.ring();
  std::vector<bool> kept(R.arity(), false);
  for (std::size_t k : keep) {
    if (k >= R.arity()) throw InputError("eliminate: variable index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> drop, stay;
  for (std::size_t i = 0; i < R.arity(); ++i) (kept[i] ? stay : drop).push_back(i);
  if (drop.empty()) return J;
  if (stay.empty()) return J.is_unit() ? Ideal::unit(J.ring()) : Ideal(J.ring());

  RingSpec s;
  s.field = R.field();
  std::vector<std::size_t> to_new(R.arity()), to_old;
  for (std::size_t i : drop) {
    to_new[i] = s.names.size();
    to_old.push_back(i);
    s.names.push_back(R.names()[i]);
    s.weights.push_back(R.weights()[i]);
  }
  for (std::size_t i : stay) {
    to_new[i] = s.names.size();
    to_old.push_back(i);
    s.names.push_back(R.names()[i]);
    s.weights.push_back(R.weights()[i]);
  }
  RingPtr E = Ring::make(s, MonomialOrder::elimination(drop.size()));
  std::vector<Polynomial> in;
  for (const auto& g : J.gens()) in.push_back(g.mapped(E, to_new));
  std::vector<Polynomial> out;
  for (const auto& b : groebner_basis(E, in)) {
    bool free_of_dropped = true;
    for (std::size_t t = 0; t < b.size() && free_of_dropped; ++t) {
      Monomial m = b.monomial(t);
      for (std::size_t v = 0; v < drop.size(); ++v) {
        if (m.exp[v]) {
          free_of_dropped = false;
          break;
        }
      }
    }
    if (free_of_dropped) out.push_back(b.mapped(J.ring(), to_old));
  }
  return Ideal(J.ring(), std::move(out));
}

}  // namespace socle
