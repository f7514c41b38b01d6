#include "socle/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <type_traits>

#include "kernels.hpp"
#include "socle/linalg.hpp"

namespace socle::oracle {

namespace {

using Exps = std::array<Exponent, kMaxVars>;

unsigned total(const Exps& e) {
  unsigned t = 0;
  for (auto x : e) t += x;
  return t;
}

Exps add(const Exps& a, const Exps& b) {
  Exps c{};
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] = static_cast<Exponent>(a[i] + b[i]);
  return c;
}

// Every exponent vector of total degree d in n variables, lexicographically descending.
void enumerate(std::size_t n, unsigned d, std::vector<Exps>& out) {
  Exps e{};
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<Exponent>(left);
      out.push_back(e);
      e[i] = 0;
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = static_cast<Exponent>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return;
  }
  rec(rec, 0, d);
}

template <class Ops>
typename Ops::value_type convert(const Ops& ops, const Scalar& s) {
  if constexpr (std::is_same_v<Ops, detail::QQOps>) {
    if (!s.field().is_rational()) throw InputError("oracle over Q needs a rational ring");
    return s.q_value();
  } else {
    if (!s.field().is_rational()) return s.fp_value();
    const mpq_class& q = s.q_value();
    std::uint64_t den = detail::reduce_mod(q.get_den(), ops.p);
    if (den == 0) throw InputError("coefficient denominator vanishes in the oracle field");
    return ops.div(detail::reduce_mod(q.get_num(), ops.p), den);
  }
}

template <class Ops>
using OPoly = std::vector<std::pair<Exps, typename Ops::value_type>>;

template <class Ops>
OPoly<Ops> to_opoly(const Ops& ops, const Polynomial& f) {
  OPoly<Ops> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto c = convert(ops, f.coeff(i));
    if (!ops.is_zero(c)) out.emplace_back(f.monomial(i).exp, c);
  }
  return out;
}

}  // namespace

struct Subspace::Data {
  virtual ~Data() = default;
};

struct TruncatedAlgebra::Impl {
  virtual ~Impl() = default;
  virtual std::uint32_t level() const = 0;
  virtual std::size_t dim() const = 0;
  virtual const Field& field() const = 0;
  virtual std::vector<std::string> basis() const = 0;
  virtual std::shared_ptr<const Subspace::Data> zero() const = 0;
  virtual std::shared_ptr<const Subspace::Data> subspace_of(const Ideal& J) const = 0;
  virtual std::shared_ptr<const Subspace::Data> colon(const Subspace::Data& J, const Ideal& K2) const = 0;
  virtual std::shared_ptr<const Subspace::Data> socle() const = 0;
  virtual bool contains(const Subspace::Data& J, const Polynomial& f) const = 0;
  virtual bool check_ring_axioms(unsigned triples, std::uint64_t seed) const = 0;
  virtual std::size_t rank(const Subspace::Data& J) const = 0;
  virtual bool contains(const Subspace::Data& J, const Subspace::Data& other) const = 0;
  virtual std::shared_ptr<const Subspace::Data> sum(const Subspace::Data& a, const Subspace::Data& b) const = 0;
  virtual std::shared_ptr<const Subspace::Data> product(const Subspace::Data& a, const Subspace::Data& b) const = 0;
  virtual std::vector<std::string> rows(const Subspace::Data& J) const = 0;
};

struct Subspace::Handle {
  std::shared_ptr<const TruncatedAlgebra::Impl> alg;
  std::shared_ptr<const Data> data;
};

namespace {

template <class Ops>
struct Space : Subspace::Data {
  explicit Space(linalg::Echelon<Ops> e) : ech(std::move(e)) {}
  linalg::Echelon<Ops> ech;
};

template <class Ops>
class Engine final : public TruncatedAlgebra::Impl {
public:
  using V = typename Ops::value_type;
  using Vec = linalg::Row<Ops>;

  std::uint32_t level() const override { return K_; }
  std::size_t dim() const override { return basis_.size(); }
  const Field& field() const override { return field_; }

  std::vector<std::string> basis() const override {
    std::vector<std::string> out;
    for (auto c : basis_) out.push_back(text(cols_[c]));
    return out;
  }

  std::shared_ptr<const Subspace::Data> zero() const override { return wrap(fresh()); }

  std::shared_ptr<const Subspace::Data> subspace_of(const Ideal& J) const override {
    auto e = fresh();
    for (const auto& g : J.gens()) {
      auto og = to_opoly(ops_, g);
      for (std::uint32_t i = 0; i < dim(); ++i) {
        e.insert(times(og, unit(i)));
        if (e.rank() == dim()) return wrap(std::move(e));
      }
    }
    return wrap(std::move(e));
  }

  std::shared_ptr<const Subspace::Data> colon(const Subspace::Data& J, const Ideal& K2) const override {
    const auto& ej = cast(J).ech;
    const auto d = static_cast<std::uint32_t>(dim());
    std::vector<OPoly<Ops>> ks;
    for (const auto& k : K2.gens()) ks.push_back(to_opoly(ops_, k));
    std::vector<Vec> images;
    for (std::uint32_t i = 0; i < d; ++i) {
      Vec img;
      for (std::uint32_t j = 0; j < ks.size(); ++j) {
        for (auto& [c, x] : ej.reduce(times(ks[j], unit(i)))) img.emplace_back(j * d + c, x);
      }
      images.push_back(std::move(img));
    }
    auto e = fresh();
    for (auto& v : linalg::kernel(ops_, images, static_cast<std::uint32_t>(ks.size()) * d)) e.insert(v);
    return wrap(std::move(e));
  }

  std::shared_ptr<const Subspace::Data> socle() const override {
    Engine up(ring_, K_ + 1, field_, cap_, ops_, rel_source_);
    std::vector<std::uint32_t> domain;
    for (std::uint32_t i = 0; i < up.dim(); ++i) {
      if (total(up.cols_[up.basis_[i]]) < K_) domain.push_back(i);
    }
    const auto d = static_cast<std::uint32_t>(up.dim());
    std::vector<Vec> images;
    for (auto i : domain) {
      Vec img;
      for (std::uint32_t j = 0; j < n_; ++j) {
        OPoly<Ops> x{{unit_exps(j), ops_.one()}};
        for (auto& [c, v] : up.times(x, up.unit(i))) img.emplace_back(j * d + c, v);
      }
      images.push_back(std::move(img));
    }
    auto e = fresh();
    for (auto& v : linalg::kernel(ops_, images, static_cast<std::uint32_t>(n_) * d)) {
      Vec w;
      for (auto& [c, x] : v) {
        auto p = pos_[index_.at(up.cols_[up.basis_[domain[c]]])];
        w.emplace_back(static_cast<std::uint32_t>(p), x);
      }
      std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(w);
    }
    return wrap(std::move(e));
  }

  bool contains(const Subspace::Data& J, const Polynomial& f) const override {
    return cast(J).ech.contains(nf(to_opoly(ops_, f)));
  }

  bool check_ring_axioms(unsigned triples, std::uint64_t seed) const override {
    if (dim() == 0) return true;
    std::mt19937_64 rng(seed);
    auto pick = [&] { return unit(static_cast<std::uint32_t>(rng() % dim())); };
    for (unsigned t = 0; t < triples; ++t) {
      Vec a = pick(), b = pick(), c = pick();
      if (mul(a, b) != mul(b, a)) return false;
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    return true;
  }

  std::size_t rank(const Subspace::Data& J) const override { return cast(J).ech.rank(); }

  bool contains(const Subspace::Data& J, const Subspace::Data& other) const override {
    for (const auto& [p, row] : cast(other).ech.rows()) {
      if (!cast(J).ech.contains(row)) return false;
    }
    return true;
  }

  std::shared_ptr<const Subspace::Data> sum(const Subspace::Data& a, const Subspace::Data& b) const override {
    auto e = cast(a).ech;
    for (const auto& [p, row] : cast(b).ech.rows()) e.insert(row);
    return wrap(std::move(e));
  }

  std::shared_ptr<const Subspace::Data> product(const Subspace::Data& a, const Subspace::Data& b) const override {
    auto e = fresh();
    for (const auto& [p, u] : cast(a).ech.rows()) {
      for (const auto& [q, v] : cast(b).ech.rows()) {
        e.insert(mul(u, v));
        if (e.rank() == dim()) return wrap(std::move(e));
      }
    }
    return wrap(std::move(e));
  }

  std::vector<std::string> rows(const Subspace::Data& J) const override {
    std::vector<std::string> out;
    for (const auto& [p, row] : cast(J).ech.rows()) {
      std::string s;
      for (const auto& [c, x] : row) {
        if (!s.empty()) s += " + ";
        s += "(" + detail::to_scalar(ops_, field_, x).to_string() + ")*" + text(cols_[basis_[c]]);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

private:
  // Same defining data one level up.
  Engine(const RingPtr& ring, std::uint32_t K, Field f, std::size_t cap, Ops ops, const std::vector<OPoly<Ops>>& rels)
      : ring_(ring), n_(ring->arity()), K_(K), field_(f), cap_(cap), ops_(ops), rel_(ops, 0), rel_source_(rels) {
    build(rels);
  }

public:
  static std::shared_ptr<Engine> create(const LocalRing& A, std::uint32_t K, Field f, std::size_t cap, Ops ops) {
    std::vector<OPoly<Ops>> rels;
    for (const auto& a : A.defining().gens()) {
      auto g = to_opoly(ops, a);
      if (!g.empty()) rels.push_back(std::move(g));
    }
    return std::shared_ptr<Engine>(new Engine(A.ring(), K, f, cap, ops, rels));
  }

private:
  void build(const std::vector<OPoly<Ops>>& rels) {
    for (unsigned d = 0; d < K_; ++d) enumerate(n_, d, cols_);
    if (cols_.size() > 50 * cap_) throw BudgetError("oracle: too many monomials below the truncation level");
    for (std::uint32_t i = 0; i < cols_.size(); ++i) index_.emplace(cols_[i], i);
    rel_ = linalg::Echelon<Ops>(ops_, static_cast<std::uint32_t>(cols_.size()));
    for (const auto& g : rels) {
      unsigned low = K_;
      for (const auto& [e, c] : g) low = std::min(low, total(e));
      for (const auto& m : cols_) {
        if (total(m) + low >= K_) break;
        rel_.insert(shifted(g, m));
      }
    }
    pos_.assign(cols_.size(), -1);
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (rel_.rows().count(c)) continue;
      pos_[c] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back(c);
    }
    if (basis_.size() > cap_) {
      throw BudgetError("oracle: dim T_" + std::to_string(K_) + " = " + std::to_string(basis_.size()) +
                        " exceeds the cap " + std::to_string(cap_));
    }
  }

  static const Space<Ops>& cast(const Subspace::Data& d) { return static_cast<const Space<Ops>&>(d); }
  static std::shared_ptr<const Subspace::Data> wrap(linalg::Echelon<Ops> e) {
    return std::make_shared<const Space<Ops>>(std::move(e));
  }
  linalg::Echelon<Ops> fresh() const { return linalg::Echelon<Ops>(ops_, static_cast<std::uint32_t>(dim())); }

  Exps unit_exps(std::size_t j) const {
    Exps e{};
    e[j] = 1;
    return e;
  }

  std::string text(const Exps& e) const {
    std::vector<int> v(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n_));
    return ring_->monomial_to_string(ring_->monomial(v));
  }

  // m * g over the columns, terms of degree >= K dropped.
  Vec shifted(const OPoly<Ops>& g, const Exps& m) const {
    Vec r;
    for (const auto& [e, c] : g) {
      Exps p = add(e, m);
      if (total(p) >= K_) continue;
      r.emplace_back(index_.at(p), c);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

  Vec unit(std::uint32_t i) const { return Vec{{i, ops_.one()}}; }

  // Column vector (any order, repeated columns allowed) to basis coordinates.
  Vec to_basis(std::map<std::uint32_t, V> acc) const {
    Vec cv;
    for (auto& [c, x] : acc) {
      if (!ops_.is_zero(x)) cv.emplace_back(c, std::move(x));
    }
    Vec out;
    for (auto& [c, x] : rel_.reduce(cv)) out.emplace_back(static_cast<std::uint32_t>(pos_[c]), std::move(x));
    return out;
  }

  Vec nf(const OPoly<Ops>& g) const {
    std::map<std::uint32_t, V> acc;
    for (const auto& [e, c] : g) {
      if (total(e) >= K_) continue;
      auto& slot = acc[index_.at(e)];
      slot = ops_.add(slot, c);
    }
    return to_basis(std::move(acc));
  }

  Vec times(const OPoly<Ops>& g, const Vec& v) const {
    std::map<std::uint32_t, V> acc;
    for (const auto& [b, x] : v) {
      const Exps& m = cols_[basis_[b]];
      for (const auto& [e, c] : g) {
        Exps p = add(e, m);
        if (total(p) >= K_) continue;
        auto& slot = acc[index_.at(p)];
        slot = ops_.add(slot, ops_.mul(c, x));
      }
    }
    return to_basis(std::move(acc));
  }

  Vec mul(const Vec& u, const Vec& v) const {
    OPoly<Ops> g;
    for (const auto& [b, x] : u) g.emplace_back(cols_[basis_[b]], x);
    return times(g, v);
  }

  RingPtr ring_;
  std::size_t n_;
  std::uint32_t K_;
  Field field_;
  std::size_t cap_;
  Ops ops_;
  std::vector<Exps> cols_;
  std::map<Exps, std::uint32_t> index_;
  linalg::Echelon<Ops> rel_;
  std::vector<std::int32_t> pos_;
  std::vector<std::uint32_t> basis_;
  std::vector<OPoly<Ops>> rel_source_;
};

}  // namespace

Field oracle_field(const LocalRing& A, const Options& opts) {
  const Field& own = A.ring()->field();
  if (!own.is_rational()) return own;
  return opts.field.value_or(Field::prime(32003));
}

// Subspace

std::size_t Subspace::dim() const { return h_->alg->rank(*h_->data); }
std::size_t Subspace::codim() const { return h_->alg->dim() - dim(); }

namespace {

void same_algebra(const std::shared_ptr<const TruncatedAlgebra::Impl>& a,
                  const std::shared_ptr<const TruncatedAlgebra::Impl>& b) {
  if (a != b) throw InputError("subspaces of different truncated algebras");
}

}  // namespace

bool Subspace::contains(const Subspace& other) const {
  same_algebra(h_->alg, other.h_->alg);
  return h_->alg->contains(*h_->data, *other.h_->data);
}

bool Subspace::operator==(const Subspace& other) const {
  return dim() == other.dim() && contains(other);
}

Subspace Subspace::operator+(const Subspace& other) const {
  same_algebra(h_->alg, other.h_->alg);
  return Subspace(std::make_shared<const Handle>(Handle{h_->alg, h_->alg->sum(*h_->data, *other.h_->data)}));
}

Subspace Subspace::product(const Subspace& other) const {
  same_algebra(h_->alg, other.h_->alg);
  return Subspace(std::make_shared<const Handle>(Handle{h_->alg, h_->alg->product(*h_->data, *other.h_->data)}));
}

std::vector<std::string> Subspace::rows() const { return h_->alg->rows(*h_->data); }

// TruncatedAlgebra

TruncatedAlgebra TruncatedAlgebra::make(const LocalRing& A, std::uint32_t K, const Options& opts) {
  if (K == 0) throw InputError("truncation level must be at least 1");
  Field f = oracle_field(A, opts);
  return detail::with_ops(f, [&](auto ops) {
    using Ops = decltype(ops);
    return TruncatedAlgebra(std::static_pointer_cast<const Impl>(Engine<Ops>::create(A, K, f, opts.cap, ops)));
  });
}

std::uint32_t TruncatedAlgebra::level() const { return impl_->level(); }
std::size_t TruncatedAlgebra::dim() const { return impl_->dim(); }
const Field& TruncatedAlgebra::field() const { return impl_->field(); }
std::vector<std::string> TruncatedAlgebra::basis() const { return impl_->basis(); }

Subspace TruncatedAlgebra::zero() const {
  return Subspace(std::make_shared<const Subspace::Handle>(Subspace::Handle{impl_, impl_->zero()}));
}

Subspace TruncatedAlgebra::subspace_of(const Ideal& J) const {
  return Subspace(std::make_shared<const Subspace::Handle>(Subspace::Handle{impl_, impl_->subspace_of(J)}));
}

Subspace TruncatedAlgebra::colon(const Subspace& J, const Ideal& K2) const {
  same_algebra(impl_, J.h_->alg);
  return Subspace(std::make_shared<const Subspace::Handle>(Subspace::Handle{impl_, impl_->colon(*J.h_->data, K2)}));
}

Subspace TruncatedAlgebra::socle() const {
  return Subspace(std::make_shared<const Subspace::Handle>(Subspace::Handle{impl_, impl_->socle()}));
}

bool TruncatedAlgebra::contains(const Subspace& J, const Polynomial& f) const {
  same_algebra(impl_, J.h_->alg);
  return impl_->contains(*J.h_->data, f);
}

bool TruncatedAlgebra::check_ring_axioms(unsigned triples, std::uint64_t seed) const {
  return impl_->check_ring_axioms(triples, seed);
}

// Decisions

namespace {

constexpr std::uint32_t kMaxLevel = 64;

// First K >= from at which every subspace built by `make` has the same
// codimension in T_K and T_(K+1); returns the subspaces built at that K.
// Codimensions only grow with K, so comparing their sums suffices.
template <class Build>
auto stable(const LocalRing& A, std::uint32_t from, const Options& opts, Build make)
    -> std::optional<std::pair<std::invoke_result_t<Build, const TruncatedAlgebra&>, TruncatedAlgebra>> {
  std::optional<TruncatedAlgebra> next;
  for (std::uint32_t K = std::max<std::uint32_t>(from, 1); K < kMaxLevel; ++K) {
    TruncatedAlgebra here = next ? *next : TruncatedAlgebra::make(A, K, opts);
    try {
      next = TruncatedAlgebra::make(A, K + 1, opts);
    } catch (const BudgetError&) {
      return std::nullopt;
    }
    auto a = make(here);
    auto b = make(*next);
    auto codims = [](const auto& t) {
      return std::apply([](const auto&... x) { return (std::size_t{0} + ... + x.codim()); }, t);
    };
    if (codims(a) == codims(b)) return std::make_pair(std::move(a), here);
  }
  return std::nullopt;
}

std::uint32_t level_of(const LocalRing& A, const Ideal& J, const Options& opts) {
  auto s = stable(A, 1, opts, [&](const TruncatedAlgebra& T) { return std::make_tuple(T.subspace_of(J)); });
  if (!s) throw InputError("oracle: ideal is not m-primary within the cap");
  return s->second.level();
}

}  // namespace

std::optional<Answer> length(const LocalRing& A, const Ideal& J, const Options& opts) {
  auto s = stable(A, 1, opts, [&](const TruncatedAlgebra& T) { return std::make_tuple(T.subspace_of(J)); });
  if (!s) return std::nullopt;
  const auto& T = s->second;
  return Answer{true, std::get<0>(s->first).codim(), T.level(), T.dim()};
}

Answer equal(const LocalRing& A, const Ideal& J1, const Ideal& J2, const Options& opts) {
  auto s = stable(A, 1, opts, [&](const TruncatedAlgebra& T) {
    return std::make_tuple(T.subspace_of(J1), T.subspace_of(J2));
  });
  if (!s) throw InputError("oracle: ideals are not m-primary within the cap");
  const auto& [a, b] = s->first;
  return Answer{a == b, a.codim(), s->second.level(), s->second.dim()};
}

Answer contains(const LocalRing& A, const Ideal& J, const Polynomial& f, const Options& opts) {
  auto s = stable(A, 1, opts, [&](const TruncatedAlgebra& T) { return std::make_tuple(T.subspace_of(J)); });
  if (!s) throw InputError("oracle: ideal is not m-primary within the cap");
  const auto& T = s->second;
  return Answer{T.contains(std::get<0>(s->first), f), std::get<0>(s->first).codim(), T.level(), T.dim()};
}

Answer socle_matches(const LocalRing& A, const Ideal& Q, const Ideal& I, const Options& opts) {
  std::uint32_t L = level_of(A, Q, opts);
  auto T = TruncatedAlgebra::make(A, L + 1, opts);
  auto q = T.subspace_of(Q);
  auto col = T.colon(q, A.maximal());
  auto cand = T.subspace_of(I);
  return Answer{col == cand, q.codim() - col.codim(), T.level(), T.dim()};
}

Answer i2_eq_qi(const LocalRing& A, const Ideal& Q, const Options& opts) {
  std::uint32_t L = level_of(A, Q, opts);
  auto s = stable(A, L + 1, opts, [&](const TruncatedAlgebra& T) {
    auto q = T.subspace_of(Q);
    auto i = T.colon(q, A.maximal());
    return std::make_tuple(q.product(i), i.product(i), q, i);
  });
  if (!s) throw BudgetError("oracle: no stable level for QI within the cap");
  const auto& [qi, i2, q, i] = s->first;
  return Answer{qi == i2, q.codim() - i.codim(), s->second.level(), s->second.dim()};
}

std::optional<Answer> reduction_number(const LocalRing& A, const Ideal& Q, unsigned cap, const Options& opts) {
  std::uint32_t L = level_of(A, Q, opts);
  for (unsigned n = 0; n <= cap; ++n) {
    auto s = stable(A, L + 1, opts, [&](const TruncatedAlgebra& T) {
      auto q = T.subspace_of(Q);
      auto i = T.colon(q, A.maximal());
      auto in = i;
      for (unsigned k = 1; k < n; ++k) in = in.product(i);
      auto qin = n == 0 ? q : q.product(in);
      auto in1 = n == 0 ? i : in.product(i);
      return std::make_tuple(qin, in1);
    });
    if (!s) throw BudgetError("oracle: no stable level within the cap");
    const auto& [lhs, rhs] = s->first;
    if (lhs == rhs) return Answer{true, n, s->second.level(), s->second.dim()};
  }
  return std::nullopt;
}

}  // namespace socle::oracle
