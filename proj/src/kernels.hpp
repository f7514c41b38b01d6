#pragma once

// Coefficient-generic term kernels shared by polynomial arithmetic and
// reduction. Ops is detail::FpOps or detail::QQOps.

#include <algorithm>
#include <numeric>

#include "socle/polynomial.hpp"

namespace socle::detail {

template <class Ops>
using Val = typename Ops::value_type;

template <class Ops>
Terms<Val<Ops>>& terms_of(TermData& d) {
  return std::get<Terms<Val<Ops>>>(d);
}

template <class Ops>
const Terms<Val<Ops>>& terms_of(const TermData& d) {
  return std::get<Terms<Val<Ops>>>(d);
}

inline std::uint64_t raw_value(const FpOps&, const Scalar& s) { return s.fp_value(); }
inline const mpq_class& raw_value(const QQOps&, const Scalar& s) { return s.q_value(); }
inline Scalar to_scalar(const FpOps&, const Field& f, std::uint64_t v) { return Scalar::from_fp(f, v); }
inline Scalar to_scalar(const QQOps&, const Field&, const mpq_class& v) { return Scalar::from_q(v); }

inline TermData empty_terms(const Field& f) {
  if (f.is_rational()) return Terms<mpq_class>{};
  return Terms<std::uint64_t>{};
}

/// a[a_begin..] + c * m * b, dropping terms of total degree >= trunc when trunc > 0.
template <class Ops>
Terms<Val<Ops>> axpy(const Ring& R, const Ops& ops, const Terms<Val<Ops>>& a, const Val<Ops>& c, const Monomial& m,
                     const Terms<Val<Ops>>& b, std::uint32_t trunc = 0, std::size_t a_begin = 0) {
  Terms<Val<Ops>> out;
  out.mon.reserve(a.size() - a_begin + b.size());
  out.coef.reserve(a.size() - a_begin + b.size());
  std::size_t i = a_begin, j = 0;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    while (j < b.size()) {
      if (trunc && b.mon[j].total + m.total >= trunc) {
        ++j;
        continue;
      }
      bm = b.mon[j] * m;
      have_b = true;
      return;
    }
    have_b = false;
  };
  load_b();
  while (i < a.size() || have_b) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (!have_b) {
      cmp = 1;
    } else {
      cmp = R.compare(a.mon[i], bm);
    }
    if (cmp > 0) {
      out.push(a.mon[i], a.coef[i]);
      ++i;
    } else if (cmp < 0) {
      out.push(bm, ops.mul(c, b.coef[j]));
      ++j;
      load_b();
    } else {
      auto v = ops.add(a.coef[i], ops.mul(c, b.coef[j]));
      if (!ops.is_zero(v)) out.push(a.mon[i], std::move(v));
      ++i;
      ++j;
      load_b();
    }
  }
  return out;
}

/// Sorts descending and merges equal monomials.
template <class Ops>
Terms<Val<Ops>> canonicalize(const Ring& R, const Ops& ops, std::vector<Monomial> mon, std::vector<Val<Ops>> coef) {
  std::vector<std::size_t> idx(mon.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return R.compare(mon[x], mon[y]) > 0; });
  Terms<Val<Ops>> out;
  for (std::size_t k = 0; k < idx.size();) {
    const Monomial& m = mon[idx[k]];
    Val<Ops> acc = coef[idx[k]];
    std::size_t l = k + 1;
    while (l < idx.size() && mon[idx[l]] == m) {
      acc = ops.add(acc, coef[idx[l]]);
      ++l;
    }
    if (!ops.is_zero(acc)) out.push(m, std::move(acc));
    k = l;
  }
  return out;
}

template <class Ops>
Terms<Val<Ops>> multiply(const Ring& R, const Ops& ops, const Terms<Val<Ops>>& a, const Terms<Val<Ops>>& b,
                         std::uint32_t trunc = 0) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return axpy(R, ops, Terms<Val<Ops>>{}, a.coef[0], a.mon[0], b, trunc);
  if (b.size() == 1) return axpy(R, ops, Terms<Val<Ops>>{}, b.coef[0], b.mon[0], a, trunc);
  std::vector<Monomial> mon;
  std::vector<Val<Ops>> coef;
  mon.reserve(a.size() * b.size());
  coef.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (trunc && a.mon[i].total + b.mon[j].total >= trunc) continue;
      mon.push_back(a.mon[i] * b.mon[j]);
      coef.push_back(ops.mul(a.coef[i], b.coef[j]));
    }
  }
  return canonicalize(R, ops, std::move(mon), std::move(coef));
}

template <class Ops>
void scale_in_place(const Ops& ops, Terms<Val<Ops>>& t, const Val<Ops>& c) {
  for (auto& x : t.coef) x = ops.mul(x, c);
}

template <class Ops>
void make_monic(const Ops& ops, Terms<Val<Ops>>& t) {
  if (t.empty() || ops.is_one(t.coef[0])) return;
  scale_in_place(ops, t, ops.inv(t.coef[0]));
}

}  // namespace socle::detail
