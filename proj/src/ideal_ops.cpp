#include "socle/ideal_ops.hpp"

#include <functional>
#include <optional>

namespace socle {

namespace {

void same_ambient(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  same_ambient(a, b);
  std::vector<Polynomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal product(const Ideal& a, const Ideal& b) {
  same_ambient(a, b);
  std::vector<Polynomial> g;
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) g.push_back(x * y);
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal power(const Ideal& J, unsigned n) {
  if (n == 0) return Ideal::unit(J.ring());
  const auto& gs = J.gens();
  std::vector<Polynomial> out;
  // one product per multiset of generator indices
  std::function<void(std::size_t, unsigned, const Polynomial&)> rec = [&](std::size_t from, unsigned left,
                                                                          const Polynomial& acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < gs.size(); ++i) rec(i, left - 1, acc * gs[i]);
  };
  rec(0, n, Polynomial::constant(J.ring(), 1));
  return Ideal(J.ring(), std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  same_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const Ring& R = *a.ring();
  RingSpec s;
  s.field = R.field();
  std::string t = "_t";
  while (R.index_of(t)) t += "_";
  s.names.push_back(t);
  s.weights.push_back(1);
  for (std::size_t i = 0; i < R.arity(); ++i) {
    s.names.push_back(R.names()[i]);
    s.weights.push_back(R.weights()[i]);
  }
  if (s.names.size() > kMaxVars) throw InputError("intersection needs one auxiliary variable beyond the limit");
  RingPtr E = Ring::make(s, MonomialOrder::elimination(1));
  std::vector<std::size_t> up(R.arity()), down(R.arity() + 1);
  for (std::size_t i = 0; i < R.arity(); ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  Polynomial T = Polynomial::variable(E, 0);
  Polynomial one_minus_T = Polynomial::constant(E, 1) - T;
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) gens.push_back(T * f.mapped(E, up));
  for (const auto& g : b.gens()) gens.push_back(one_minus_T * g.mapped(E, up));
  std::vector<Polynomial> out;
  for (const auto& p : groebner_basis(E, gens)) {
    bool has_t = false;
    for (std::size_t k = 0; k < p.size() && !has_t; ++k) has_t = p.monomial(k).exp[0] != 0;
    if (has_t) continue;
    out.push_back(p.mapped(a.ring(), down));
  }
  return Ideal(a.ring(), std::move(out));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q(f.ring());
  Polynomial h = f;
  Monomial lg = g.lead_monomial();
  Scalar cg = g.lead_coeff();
  while (!h.is_zero()) {
    Monomial lh = h.lead_monomial();
    if (!divides(lg, lh)) throw std::logic_error("divide_exact: not a multiple");
    Polynomial t = Polynomial::term(f.ring(), quotient(lh, lg), h.lead_coeff() / cg);
    q = q + t;
    h = h - t * g;
  }
  return q;
}

Ideal colon(const Ideal& J, const Polynomial& g) {
  require_same_ring(*J.ring(), *g.ring());
  if (g.is_zero()) throw InputError("colon by zero ideal");
  if (J.contains(g)) return Ideal::unit(J.ring());
  Ideal cap = intersect(J, principal(g));
  std::vector<Polynomial> out;
  for (const auto& h : cap.basis()) out.push_back(divide_exact(h, g));
  return Ideal(J.ring(), std::move(out));
}

Ideal colon(const Ideal& J, const Ideal& K) {
  same_ambient(J, K);
  if (K.is_zero()) throw InputError("colon by zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : K.gens()) {
    Ideal c = colon(J, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return Ideal(J.ring(), acc->basis());
}

Saturation saturate(const Ideal& J, const Ideal& K) {
  Ideal cur = J;
  for (unsigned n = 0; n < 256; ++n) {
    Ideal next = colon(cur, K);
    if (cur.contains(next)) return {cur, n};
    cur = next;
  }
  throw BudgetError("saturation did not stabilize");
}

bool equal_as_S_ideals(const Ideal& a, const Ideal& b) {
  return equal_as_S_ideals(a, b, a.ring()->order());
}

bool equal_as_S_ideals(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  same_ambient(a, b);
  return a.basis(order) == b.basis(order);
}

Ideal maximal_ideal(const RingPtr& R) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < R->arity(); ++i) v.push_back(Polynomial::variable(R, i));
  return Ideal(R, std::move(v));
}

Ideal principal(const Polynomial& f) {
  return Ideal(f.ring(), {f});
}

}  // namespace socle
