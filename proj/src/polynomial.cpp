#include "socle/polynomial.hpp"

#include "kernels.hpp"

namespace socle {

using detail::terms_of;
using detail::with_ops;

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw InputError("polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), data_(detail::empty_terms(ring_->field())) {}

Polynomial::Polynomial(RingPtr ring, TermData data) : ring_(std::move(ring)), data_(std::move(data)) {}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return term(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  Scalar s(ring->field(), c);
  return term(std::move(ring), Monomial{}, s);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  if (!(c.field() == ring->field())) throw InputError("coefficient field does not match ring");
  Polynomial p(ring);
  if (c.is_zero()) return p;
  with_ops(ring->field(), [&](auto ops) {
    using Ops = decltype(ops);
    terms_of<Ops>(p.data_).push(m, detail::raw_value(ops, c));
  });
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Monomial m = ring->variable(i);
  return term(ring, m, Scalar(ring->field(), 1));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms) {
  Polynomial p(ring);
  with_ops(ring->field(), [&](auto ops) {
    using Ops = decltype(ops);
    std::vector<Monomial> mon;
    std::vector<detail::Val<Ops>> coef;
    for (auto& [m, c] : terms) {
      if (!(c.field() == ring->field())) throw InputError("coefficient field does not match ring");
      mon.push_back(m);
      coef.push_back(detail::raw_value(ops, c));
    }
    terms_of<Ops>(p.data_) = detail::canonicalize(*ring, ops, std::move(mon), std::move(coef));
  });
  return p;
}

bool Polynomial::is_zero() const {
  return size() == 0;
}

std::size_t Polynomial::size() const {
  return std::visit([](const auto& t) { return t.size(); }, data_);
}

Monomial Polynomial::monomial(std::size_t i) const {
  return std::visit([&](const auto& t) { return t.mon.at(i); }, data_);
}

Scalar Polynomial::coeff(std::size_t i) const {
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    return detail::to_scalar(ops, ring_->field(), terms_of<Ops>(data_).coef.at(i));
  });
}

Monomial Polynomial::lead_monomial() const {
  if (is_zero()) throw std::domain_error("lead monomial of zero polynomial");
  return monomial(0);
}

Scalar Polynomial::lead_coeff() const {
  if (is_zero()) throw std::domain_error("lead coefficient of zero polynomial");
  return coeff(0);
}

Scalar Polynomial::constant_term() const {
  std::size_t n = size();
  if (n && monomial(n - 1).is_one()) return coeff(n - 1);
  return Scalar(ring_->field(), 0);
}

std::optional<std::uint32_t> Polynomial::weighted_degree() const {
  if (is_zero()) throw std::domain_error("weighted degree of zero polynomial");
  return std::visit(
      [](const auto& t) -> std::optional<std::uint32_t> {
        std::uint32_t d = t.mon[0].weighted;
        for (const auto& m : t.mon) {
          if (m.weighted != d) return std::nullopt;
        }
        return d;
      },
      data_);
}

std::uint32_t Polynomial::min_total_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return std::visit(
      [](const auto& t) {
        std::uint32_t d = t.mon[0].total;
        for (const auto& m : t.mon) d = std::min(d, m.total);
        return d;
      },
      data_);
}

std::uint32_t Polynomial::max_total_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return std::visit(
      [](const auto& t) {
        std::uint32_t d = 0;
        for (const auto& m : t.mon) d = std::max(d, m.total);
        return d;
      },
      data_);
}

void Polynomial::check(const Polynomial& o) const {
  require_same_ring(*ring_, *o.ring_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    return Polynomial(ring_, detail::axpy(*ring_, ops, terms_of<Ops>(data_), ops.one(), Monomial{}, terms_of<Ops>(o.data_)));
  });
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check(o);
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    return Polynomial(ring_, detail::axpy(*ring_, ops, terms_of<Ops>(data_), ops.neg(ops.one()), Monomial{},
                                          terms_of<Ops>(o.data_)));
  });
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    return Polynomial(ring_, detail::multiply(*ring_, ops, terms_of<Ops>(data_), terms_of<Ops>(o.data_)));
  });
}

Polynomial Polynomial::operator-() const {
  return scaled(Scalar(ring_->field(), -1));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (!(c.field() == ring_->field())) throw InputError("coefficient field does not match ring");
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p = *this;
  with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    detail::scale_in_place(ops, terms_of<Ops>(p.data_), detail::raw_value(ops, c));
  });
  return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial p = *this;
  std::visit(
      [&](auto& t) {
        for (auto& x : t.mon) x = x * m;
      },
      p.data_);
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  Polynomial p = *this;
  with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    detail::make_monic(ops, terms_of<Ops>(p.data_));
  });
  return p;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  if (!ring_->field().is_rational()) return monic();
  if (sgn(std::get<Terms<mpq_class>>(data_).coef[0]) < 0) return -*this;
  return *this;
}

Polynomial Polynomial::truncated(std::uint32_t k) const {
  Polynomial p(ring_);
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        T out;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t.mon[i].total < k) out.push(t.mon[i], t.coef[i]);
        }
        p.data_ = std::move(out);
      },
      data_);
  return p;
}

Polynomial Polynomial::mapped(RingPtr target, std::span<const std::size_t> map) const {
  if (map.size() != ring_->arity()) throw InputError("variable map has wrong length");
  if (!(target->field() == ring_->field())) throw InputError("variable map changes the field");
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    const auto& t = terms_of<Ops>(data_);
    std::vector<Monomial> mon;
    mon.reserve(t.size());
    for (const auto& m : t.mon) {
      Monomial r;
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (!m.exp[i]) continue;
        if (map[i] >= target->arity()) throw InputError("variable map out of range");
        r.exp[map[i]] = static_cast<Exponent>(r.exp[map[i]] + m.exp[i]);
        r.total += m.exp[i];
        r.weighted += m.exp[i] * target->weights()[map[i]];
      }
      mon.push_back(r);
    }
    return Polynomial(target, detail::canonicalize(*target, ops, std::move(mon), t.coef));
  });
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (!(target->spec() == ring_->spec())) throw InputError("in_ring requires identical ring specs");
  return with_ops(ring_->field(), [&](auto ops) {
    using Ops = decltype(ops);
    const auto& t = terms_of<Ops>(data_);
    return Polynomial(target, detail::canonicalize(*target, ops, t.mon, t.coef));
  });
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    Scalar c = coeff(i);
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Monomial m = monomial(i);
    if (m.is_one()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += ring_->monomial_to_string(m);
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_->same_as(*o.ring_) && data_ == o.data_;
}

}  // namespace socle
