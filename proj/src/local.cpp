#include "socle/local.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "kernels.hpp"
#include "socle/linalg.hpp"

namespace socle {

namespace {

using ExpKey = std::array<Exponent, kMaxVars>;

constexpr std::size_t kMonomialCap = 1'000'000;

Monomial rebuild(const Ring& R, const Monomial& m) {
  Monomial r;
  r.exp = m.exp;
  for (std::size_t i = 0; i < R.arity(); ++i) {
    r.total += m.exp[i];
    r.weighted += m.exp[i] * R.weights()[i];
  }
  return r;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

void sort_descending(const Ring& R, std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), [&](const Monomial& a, const Monomial& b) { return R.compare(a, b) > 0; });
}

/// Every monomial of total degree `deg`, descending.
std::vector<Monomial> monomials_of_degree(const Ring& R, unsigned deg) {
  std::vector<Monomial> out;
  for (const auto& m : standard_monomials({}, R.arity(), deg + 1, kMonomialCap)) {
    if (m.total == deg) out.push_back(rebuild(R, m));
  }
  sort_descending(R, out);
  return out;
}

std::vector<Polynomial> variables(const RingPtr& R) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < R->arity(); ++i) v.push_back(Polynomial::variable(R, i));
  return v;
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool outside_m(const Polynomial& p) {
  return !p.constant_term().is_zero();
}

/// Generators reduced modulo the defining ideal, zeros dropped.
Ideal reduced(const LocalRing& A, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial r = A.reduce(g);
    if (!r.is_zero()) out.push_back(r.normalized());
  }
  return A.ideal(std::move(out));
}

Ideal local_product(const LocalRing& A, const Ideal& a, const Ideal& b) {
  return reduced(A, product(a, b).gens());
}

Ideal local_power(const LocalRing& A, const Ideal& J, unsigned n) {
  if (n == 0) return Ideal::unit(A.ring());
  Ideal acc = reduced(A, J.gens());
  for (unsigned k = 1; k < n; ++k) acc = local_product(A, acc, J);
  return acc;
}

/// g in (a + J) S_m, where L = a + J.
bool local_member(const Ideal& L, const Polynomial& g) {
  if (L.contains(g)) return true;
  // homogeneous ideals are contractions of their localizations
  if (L.is_homogeneous()) return false;
  for (const auto& c : colon(L, g).gens()) {
    if (outside_m(c)) return true;
  }
  return false;
}

std::string join(const std::vector<Polynomial>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].normalized().to_string();
  }
  return s;
}

/// k-th forward difference of `h` at index i (0-based).
std::int64_t difference(const std::vector<std::uint64_t>& h, unsigned k, std::size_t i) {
  std::int64_t acc = 0;
  std::int64_t binom = 1;
  for (unsigned j = 0; j <= k; ++j) {
    std::int64_t term = binom * static_cast<std::int64_t>(h[i + j]);
    acc += ((k - j) % 2 == 0) ? term : -term;
    binom = binom * (k - j) / (j + 1);
  }
  return acc;
}

/// Colength of a + m^n.
std::uint64_t truncation_dim(const LocalRing& A, std::uint32_t n) {
  auto tb = truncated_basis(A.ring(), A.defining().gens(), n);
  return count_standard_monomials(tb.leads, A.ring()->arity(), n, kMonomialCap);
}

bool m_primary_exact(const RingPtr& R, const std::vector<Polynomial>& gens) {
  auto sat = saturate(Ideal(R, gens), maximal_ideal(R));
  for (const auto& b : sat.ideal.basis()) {
    if (outside_m(b)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::int64_t> LocalVerdict::get(std::string_view key) const {
  for (const auto& [k, v] : observed) {
    if (k == key) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- LocalRing

struct LocalRing::Cache {
  std::mutex mu;
  std::optional<unsigned> dim;
  std::optional<Saturation> sat;
  std::optional<std::uint64_t> mult;
};

LocalRing::LocalRing(RingPtr ring, std::vector<Polynomial> defining)
    : ring_(ring), a_(ring, std::move(defining)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : a_.gens()) {
    if (outside_m(g)) throw InputError("defining ideal is not inside the maximal ideal: " + g.to_string());
  }
  graded_ = a_.is_homogeneous();
}

LocalRing LocalRing::from_file(const RingFile& file) {
  return LocalRing(file.ring, file.quotient);
}

Ideal LocalRing::lift(const Ideal& J) const {
  return Ideal(ring_, concat(a_.gens(), J.gens()));
}

unsigned LocalRing::dim() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->dim) return *cache_->dim;
  }
  unsigned d = krull_dim(*this);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->dim) cache_->dim = d;
  return *cache_->dim;
}

const Saturation& LocalRing::saturation() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->sat) return *cache_->sat;
  }
  Saturation s = saturate(a_, maximal());
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->sat) cache_->sat.emplace(std::move(s));
  return *cache_->sat;
}

std::uint64_t LocalRing::multiplicity() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->mult) return *cache_->mult;
  }
  std::uint64_t e = hilbert_samuel(*this, std::nullopt).multiplicity;
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->mult) cache_->mult = e;
  return *cache_->mult;
}

// ----------------------------------------------------------------- Artinian

struct Artinian::Impl {
  RingPtr home;
  RingPtr work;
  std::vector<Polynomial> basis;
  std::uint32_t trunc = 0;
  std::uint32_t level = 0;
  bool graded = false;
  std::vector<Polynomial> jgens;
  std::vector<Monomial> mons;
  std::map<ExpKey, std::uint32_t> index;
  std::vector<std::size_t> id;

  Polynomial to_work(const Polynomial& f) const { return f.ring()->same_as(*work) ? f : f.mapped(work, id); }
  Polynomial to_home(const Polynomial& f) const { return f.ring()->same_as(*home) ? f : f.mapped(home, id); }
  Polynomial nf(const Polynomial& f) const { return reduce(to_work(f), basis, trunc); }

  void set_monomials(std::vector<Monomial> raw) {
    mons.clear();
    for (const auto& m : raw) mons.push_back(rebuild(*work, m));
    sort_descending(*work, mons);
    index.clear();
    for (std::uint32_t i = 0; i < mons.size(); ++i) index.emplace(mons[i].exp, i);
  }

  template <class Ops>
  linalg::Row<Ops> row(const Ops& ops, const Polynomial& nfw) const {
    linalg::Row<Ops> r;
    for (std::size_t t = 0; t < nfw.size(); ++t) {
      auto it = index.find(nfw.monomial(t).exp);
      if (it == index.end()) throw std::logic_error("normal form leaves the standard basis");
      r.emplace_back(it->second, detail::raw_value(ops, nfw.coeff(t)));
    }
    return r;
  }

  template <class Ops>
  Polynomial vector_poly(const Ops& ops, const linalg::Row<Ops>& v) const {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (const auto& [c, x] : v) terms.emplace_back(mons[c], detail::to_scalar(ops, work->field(), x));
    return Polynomial::from_terms(work, std::move(terms));
  }

  // Nilpotency index of the maximal ideal.
  std::uint32_t loewy_length() const {
    if (mons.empty()) return 1;
    return detail::with_ops(work->field(), [&](auto ops) {
      using Ops = decltype(ops);
      auto xs = variables(work);
      std::vector<linalg::Row<Ops>> current;
      for (std::uint32_t j = 0; j < mons.size(); ++j) current.push_back({{j, ops.one()}});
      std::uint32_t t = 0;
      while (!current.empty()) {
        ++t;
        linalg::Echelon<Ops> next(ops, static_cast<std::uint32_t>(mons.size()));
        for (const auto& v : current) {
          Polynomial p = vector_poly(ops, v);
          for (const auto& x : xs) next.insert(row(ops, nf(p * x)));
        }
        current.clear();
        for (const auto& [pc, r] : next.rows()) current.push_back(r);
      }
      return t;
    });
  }
};

std::optional<Artinian> Artinian::of(const LocalRing& A, const Ideal& J) {
  require_same_ring(*A.ring(), *J.ring());
  auto impl = std::make_shared<Impl>();
  impl->home = A.ring();
  impl->jgens = J.gens();
  impl->id = identity_map(A.ring()->arity());
  const std::size_t n = A.ring()->arity();
  std::vector<Polynomial> gens = concat(A.defining().gens(), J.gens());
  Ideal L(A.ring(), gens);

  if (L.is_homogeneous()) {
    impl->graded = true;
    impl->work = A.ring();
    impl->basis = L.basis();
    std::vector<Monomial> leads;
    for (const auto& b : impl->basis) leads.push_back(b.lead_monomial());
    bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
    if (!unit) {
      for (std::size_t i = 0; i < n; ++i) {
        bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.exp[i] == m.total; });
        if (!pure) return std::nullopt;
      }
    }
    impl->set_monomials(standard_monomials(leads, n, UINT32_MAX, kMonomialCap));
    impl->level = impl->loewy_length();
    return Artinian(impl);
  }

  std::map<std::uint32_t, std::pair<TruncatedBasis, std::uint64_t>> memo;
  auto dim_at = [&](std::uint32_t K) -> std::uint64_t {
    auto it = memo.find(K);
    if (it != memo.end()) return it->second.second;
    auto tb = truncated_basis(A.ring(), gens, K);
    auto c = count_standard_monomials(tb.leads, n, K, kMonomialCap);
    memo.emplace(K, std::make_pair(std::move(tb), c));
    return c;
  };
  auto stable = [&](std::uint32_t K) { return dim_at(K) == dim_at(K + 1); };

  const std::uint32_t budget = std::max(2u, limits().trunc_budget);
  std::uint32_t fail = 0, found = 0;
  bool exact_checked = false;
  for (std::uint32_t K = 1;; K = std::min(2 * K, budget)) {
    if (stable(K)) {
      found = K;
      break;
    }
    fail = K;
    if (K >= 8 && !exact_checked) {
      exact_checked = true;
      if (!m_primary_exact(A.ring(), gens)) return std::nullopt;
    }
    if (K == budget) {
      if (!exact_checked && !m_primary_exact(A.ring(), gens)) return std::nullopt;
      throw BudgetError("truncation did not stabilize by level " + std::to_string(budget) +
                        "; the ideal is m-primary, raise the truncation budget");
    }
  }
  while (found - fail > 1) {
    std::uint32_t mid = fail + (found - fail) / 2;
    if (stable(mid)) {
      found = mid;
    } else {
      fail = mid;
    }
  }
  const auto& tb = memo.at(found).first;
  impl->work = tb.ring;
  impl->basis = tb.basis;
  impl->trunc = found;
  impl->level = found;
  impl->set_monomials(standard_monomials(tb.leads, n, found, kMonomialCap));
  return Artinian(impl);
}

std::uint64_t Artinian::length() const {
  return impl_->mons.size();
}

std::uint32_t Artinian::level() const {
  return impl_->level;
}

bool Artinian::graded() const {
  return impl_->graded;
}

bool Artinian::contains(const Polynomial& f) const {
  return impl_->nf(f).is_zero();
}

std::optional<Polynomial> Artinian::first_outside(const Ideal& J) const {
  for (const auto& g : J.gens()) {
    if (!contains(g)) return g;
  }
  return std::nullopt;
}

Polynomial Artinian::normal_form(const Polynomial& f) const {
  return impl_->to_home(impl_->nf(f));
}

const std::vector<Monomial>& Artinian::basis() const {
  return impl_->mons;
}

std::vector<Polynomial> Artinian::colon(const std::vector<Polynomial>& g) const {
  const Impl& im = *impl_;
  std::vector<Polynomial> out = im.jgens;
  if (g.empty() || im.mons.empty()) return out;
  detail::with_ops(im.work->field(), [&](auto ops) {
    using Ops = decltype(ops);
    const auto N = static_cast<std::uint32_t>(im.mons.size());
    std::vector<Polynomial> gw;
    for (const auto& x : g) gw.push_back(im.nf(x));
    std::vector<linalg::Row<Ops>> images;
    for (std::uint32_t j = 0; j < N; ++j) {
      linalg::Row<Ops> img;
      for (std::size_t k = 0; k < gw.size(); ++k) {
        for (auto [c, x] : im.row(ops, im.nf(gw[k].times(im.mons[j])))) {
          img.emplace_back(static_cast<std::uint32_t>(k * N + c), std::move(x));
        }
      }
      images.push_back(std::move(img));
    }
    for (const auto& v : linalg::kernel(ops, images, static_cast<std::uint32_t>(N * gw.size()))) {
      out.push_back(im.to_home(im.vector_poly(ops, v)).normalized());
    }
  });
  return out;
}

// -------------------------------------------------------------- operations

Length stable_trunc_dim(const LocalRing& A, const Ideal& J) {
  auto art = Artinian::of(A, J);
  if (!art) return {false, 0, limits().trunc_budget};
  return {true, art->length(), art->level()};
}

LocalVerdict is_sop(const LocalRing& A, const std::vector<Polynomial>& gens) {
  if (gens.size() != A.dim()) {
    throw InputError("a system of parameters needs " + std::to_string(A.dim()) + " elements, got " +
                     std::to_string(gens.size()));
  }
  LocalVerdict v;
  for (const auto& g : gens) {
    if (outside_m(g)) {
      v.notes.push_back("element outside the maximal ideal: " + g.to_string());
      return v;
    }
  }
  auto art = Artinian::of(A, A.ideal(gens));
  v.answer = art.has_value();
  if (art) {
    v.level = art->level();
    v.put("colength", static_cast<std::int64_t>(art->length()));
  } else {
    v.notes.push_back("not m-primary");
  }
  return v;
}

ParamIdeal ParamIdeal::make(const LocalRing& A, std::vector<Polynomial> gens) {
  if (gens.size() != A.dim()) {
    throw InputError("a parameter ideal needs " + std::to_string(A.dim()) + " generators, got " +
                     std::to_string(gens.size()));
  }
  for (const auto& g : gens) {
    if (outside_m(g)) throw InputError("not a system of parameters: " + g.to_string() + " is a unit");
  }
  Ideal q = A.ideal(gens);
  auto art = Artinian::of(A, q);
  if (!art) throw InputError("not a system of parameters: (" + join(gens) + ") is not m-primary");
  return ParamIdeal(std::move(q), std::make_shared<const Artinian>(std::move(*art)));
}

Ideal socle_ideal(const LocalRing& A, const ParamIdeal& Q) {
  return A.ideal(Q.quotient().colon(variables(A.ring())));
}

LocalVerdict contains_local(const LocalRing& A, const Ideal& J1, const Ideal& J2) {
  LocalVerdict v;
  Ideal L = A.lift(J2);
  for (const auto& g : J1.gens()) {
    if (!local_member(L, g)) {
      v.witness = g;
      return v;
    }
  }
  v.answer = true;
  return v;
}

LocalVerdict check_equal_local(const LocalRing& A, const Ideal& J1, const Ideal& J2) {
  LocalVerdict v;
  Ideal L1 = A.lift(J1), L2 = A.lift(J2);
  if (L1.is_homogeneous() && L2.is_homogeneous()) {
    v.notes.push_back("homogeneous");
    if (auto w = std::find_if(J1.gens().begin(), J1.gens().end(), [&](const auto& g) { return !L2.contains(g); });
        w != J1.gens().end()) {
      v.witness = *w;
      return v;
    }
    if (auto w = std::find_if(J2.gens().begin(), J2.gens().end(), [&](const auto& g) { return !L1.contains(g); });
        w != J2.gens().end()) {
      v.witness = *w;
      return v;
    }
    v.answer = true;
    return v;
  }
  auto a1 = Artinian::of(A, J1);
  auto a2 = a1 ? Artinian::of(A, J2) : std::nullopt;
  if (a1 && a2) {
    v.notes.push_back("m-primary");
    v.level = std::max(a1->level(), a2->level());
    v.put("colength_left", static_cast<std::int64_t>(a1->length()));
    v.put("colength_right", static_cast<std::int64_t>(a2->length()));
    if (auto w = a2->first_outside(J1)) {
      v.witness = *w;
      return v;
    }
    if (auto w = a1->first_outside(J2)) {
      v.witness = *w;
      return v;
    }
    v.answer = true;
    return v;
  }
  v.notes.push_back("general");
  auto c = contains_local(A, J1, J2);
  if (!c.answer) {
    v.witness = c.witness;
    return v;
  }
  c = contains_local(A, J2, J1);
  v.witness = c.witness;
  v.answer = c.answer;
  return v;
}

LocalVerdict check_i2_eq_qi(const LocalRing& A, const ParamIdeal& Q) {
  LocalVerdict v;
  Ideal I = socle_ideal(A, Q);
  auto artI = Artinian::of(A, I);
  if (!artI) throw std::logic_error("socle ideal is not m-primary");
  v.put("colength_q", static_cast<std::int64_t>(Q.colength()));
  v.put("colength_i", static_cast<std::int64_t>(artI->length()));
  v.put("index", static_cast<std::int64_t>(Q.colength() - artI->length()));
  if (artI->length() == 0) {
    v.notes.push_back("I = A");
    v.witness = Polynomial::constant(A.ring(), 1);
    v.level = Q.quotient().level();
    return v;
  }
  Ideal QI = local_product(A, Q.ideal(), I);
  Ideal I2 = local_power(A, I, 2);
  auto artQI = Artinian::of(A, QI);
  auto artI2 = Artinian::of(A, I2);
  if (!artQI || !artI2) throw std::logic_error("products of parameter ideals are m-primary");
  v.level = std::max(artQI->level(), artI2->level());
  v.put("colength_qi", static_cast<std::int64_t>(artQI->length()));
  v.put("colength_i2", static_cast<std::int64_t>(artI2->length()));
  auto w = artQI->first_outside(I2);
  v.answer = !w.has_value();
  if (w) v.witness = w->normalized();
  if (v.answer != (artQI->length() == artI2->length())) throw std::logic_error("containment and colength disagree");

  Ideal m = A.maximal();
  auto artMQ = Artinian::of(A, local_product(A, m, Q.ideal()));
  v.put("m_i_in_m_q", artMQ->first_outside(local_product(A, m, I)) ? 0 : 1);
  return v;
}

ReductionNumber reduction_number(const LocalRing& A, const ParamIdeal& Q, std::optional<unsigned> cap) {
  ReductionNumber out;
  const unsigned d = A.dim();
  if (cap) {
    out.cap = *cap;
  } else {
    std::uint64_t e = A.multiplicity();
    out.cap = (d == 1 && e > 1) ? static_cast<unsigned>(e - 1) : 8;
  }
  Ideal I = socle_ideal(A, Q);
  if (!Q.quotient().first_outside(I)) {
    out.value = 0;
  } else {
    Ideal P = reduced(A, I.gens());
    for (unsigned n = 1; n <= out.cap; ++n) {
      Ideal next = local_product(A, P, I);
      auto art = Artinian::of(A, local_product(A, Q.ideal(), P));
      if (!art) throw std::logic_error("Q I^n is not m-primary");
      if (!art->first_outside(next)) {
        out.value = n;
        break;
      }
      P = std::move(next);
    }
  }

  if (d == 1) {
    // I_n = I^{n+1} : a^n grows with n; its first repeat bounds the reduction number
    const Polynomial& a = Q.gens().front();
    Ideal P = reduced(A, I.gens());
    std::optional<std::uint64_t> prev;
    for (unsigned n = 0; n <= out.cap + 1; ++n) {
      auto art = Artinian::of(A, P);
      Ideal In = A.ideal(art->colon({a.pow(n)}));
      auto artIn = Artinian::of(A, In);
      std::uint64_t len = artIn->length();
      out.chain_colengths.push_back(len);
      if (prev && *prev == len) {
        out.chain_bound = n;  // I_{n-1} = I_n gives r <= n
        break;
      }
      prev = len;
      P = local_product(A, P, I);
    }
    if (out.chain_bound) {
      bool consistent = out.value ? *out.value <= *out.chain_bound : *out.chain_bound > out.cap;
      if (!consistent) throw std::logic_error("reduction number contradicts the colon chain bound");
    }
  }
  return out;
}

HilbertSamuel hilbert_samuel(const LocalRing& A, const std::optional<Ideal>& J) {
  HilbertSamuel hs;
  hs.degree = A.dim();
  const unsigned d = hs.degree;
  const std::uint32_t limit = std::max(d + 4, limits().trunc_budget);
  auto value = [&](std::uint32_t n) -> std::uint64_t {
    if (!J) return truncation_dim(A, n);
    auto art = Artinian::of(A, local_power(A, *J, n));
    if (!art) throw InputError("ideal is not m-primary");
    return art->length();
  };
  for (std::uint32_t n0 = 1; n0 + d + 2 <= limit; ++n0) {
    while (hs.values.size() < n0 + d + 2) hs.values.push_back(value(static_cast<std::uint32_t>(hs.values.size() + 1)));
    if (difference(hs.values, d + 1, n0 - 1) == 0 && difference(hs.values, d + 1, n0) == 0) {
      std::int64_t e = difference(hs.values, d, n0 - 1);
      if (e <= 0) throw std::logic_error("non-positive multiplicity");
      hs.multiplicity = static_cast<std::uint64_t>(e);
      return hs;
    }
  }
  std::ostringstream msg;
  msg << "Hilbert-Samuel differences did not stabilize; values:";
  for (auto x : hs.values) msg << ' ' << x;
  throw BudgetError(msg.str());
}

std::uint64_t multiplicity(const LocalRing& A, const std::optional<Ideal>& J) {
  if (!J) return A.multiplicity();
  return hilbert_samuel(A, J).multiplicity;
}

std::uint64_t index_of_reducibility(const LocalRing& A, const ParamIdeal& Q) {
  auto art = Artinian::of(A, socle_ideal(A, Q));
  return Q.colength() - art->length();
}

std::uint64_t min_gens(const LocalRing& A, const Ideal& J) {
  Ideal r = reduced(A, J.gens());
  if (r.is_zero()) return 0;
  for (const auto& g : r.gens()) {
    if (outside_m(g)) return 1;
  }
  Ideal mJ = local_product(A, A.maximal(), r);
  auto aJ = Artinian::of(A, r);
  if (aJ) {
    auto amJ = Artinian::of(A, mJ);
    return amJ->length() - aJ->length();
  }
  std::vector<Polynomial> gens = r.gens();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Polynomial> others = mJ.gens();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) others.push_back(gens[k]);
    }
    if (local_member(A.lift(A.ideal(others)), gens[i])) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return gens.size();
}

std::vector<Polynomial> h0(const LocalRing& A) {
  std::vector<Polynomial> out;
  for (const auto& b : A.saturation().ideal.basis()) {
    if (!A.defining().contains(b)) out.push_back(b.normalized());
  }
  return out;
}

std::uint64_t h0_length(const LocalRing& A) {
  const auto& sat = A.saturation();
  auto W = h0(A);
  if (W.empty()) return 0;
  const Ring& R = *A.ring();
  std::vector<Polynomial> span;
  for (std::uint32_t deg = 0; deg < sat.exponent; ++deg) {
    for (const auto& m : monomials_of_degree(R, deg)) {
      for (const auto& w : W) {
        Polynomial p = A.reduce(w.times(m));
        if (!p.is_zero()) span.push_back(std::move(p));
      }
    }
  }
  std::vector<Monomial> cols;
  for (const auto& p : span) {
    for (std::size_t t = 0; t < p.size(); ++t) cols.push_back(p.monomial(t));
  }
  sort_descending(R, cols);
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::map<ExpKey, std::uint32_t> index;
  for (std::uint32_t i = 0; i < cols.size(); ++i) index.emplace(cols[i].exp, i);
  return detail::with_ops(R.field(), [&](auto ops) {
    using Ops = decltype(ops);
    linalg::Echelon<Ops> e(ops, static_cast<std::uint32_t>(cols.size()));
    for (const auto& p : span) {
      linalg::Row<Ops> r;
      for (std::size_t t = 0; t < p.size(); ++t) r.emplace_back(index.at(p.monomial(t).exp), detail::raw_value(ops, p.coeff(t)));
      e.insert(r);
    }
    return static_cast<std::uint64_t>(e.rank());
  });
}

LocalVerdict m_multiples_check(const LocalRing& A, const ParamIdeal& Q) {
  LocalVerdict v;
  Ideal I = socle_ideal(A, Q);
  Ideal m = A.maximal();
  auto artMQ = Artinian::of(A, local_product(A, m, Q.ideal()));
  auto w = artMQ->first_outside(local_product(A, m, I));
  v.put("m_i_in_m_q", w ? 0 : 1);
  if (w) v.witness = w->normalized();
  v.answer = !w;
  v.level = artMQ->level();
  Ideal In = reduced(A, I.gens()), Qn = reduced(A, Q.gens());
  for (unsigned n = 1; n <= 4; ++n) {
    if (n > 1) {
      In = local_product(A, In, I);
      Qn = local_product(A, Qn, Q.ideal());
    }
    auto art = Artinian::of(A, local_product(A, m, Qn));
    bool eq = !art->first_outside(local_product(A, m, In));
    v.level = std::max(v.level, art->level());
    v.put("m_i" + std::to_string(n) + "_eq_m_q" + std::to_string(n), eq ? 1 : 0);
    v.answer = v.answer && eq;
  }
  return v;
}

namespace {

// Colon equalities of the d-sequence conditions; `local` selects A versus S / a.
bool colons_agree(const LocalRing& A, const Ideal& small, const Ideal& big, bool local) {
  if (local) return contains_local(A, big, small).answer;
  return A.lift(small).contains(big);
}

LocalVerdict dseq_check(const LocalRing& A, const std::vector<Polynomial>& seq, bool local) {
  LocalVerdict v;
  v.answer = true;
  for (std::size_t i = 0; i < seq.size() && v.answer; ++i) {
    Ideal L = A.lift(A.ideal(std::vector<Polynomial>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i))));
    Ideal c = colon(L, seq[i]);
    for (std::size_t j = i; j < seq.size(); ++j) {
      Ideal cj = colon(L, seq[i] * seq[j]);
      if (!colons_agree(A, c, cj, local)) {
        v.answer = false;
        v.notes.push_back("fails at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        for (const auto& g : cj.gens()) {
          if (local ? !local_member(A.lift(c), g) : !A.lift(c).contains(g)) {
            v.witness = g.normalized();
            break;
          }
        }
        break;
      }
    }
  }
  return v;
}

LocalVerdict strong_dseq_check(const LocalRing& A, const std::vector<Polynomial>& seq, unsigned bound, bool local) {
  LocalVerdict v;
  v.answer = true;
  std::vector<unsigned> e(seq.size(), 1);
  while (true) {
    std::vector<Polynomial> p;
    for (std::size_t i = 0; i < seq.size(); ++i) p.push_back(seq[i].pow(e[i]));
    auto r = dseq_check(A, p, local);
    if (!r.answer) {
      r.notes.push_back("exponents " + [&] {
        std::string s;
        for (auto x : e) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
      }());
      return r;
    }
    std::size_t k = 0;
    while (k < e.size() && e[k] == bound) e[k++] = 1;
    if (k == e.size()) break;
    ++e[k];
  }
  return v;
}

}  // namespace

LocalVerdict is_d_sequence(const LocalRing& A, const std::vector<Polynomial>& seq) {
  return dseq_check(A, seq, true);
}

LocalVerdict is_strong_d_sequence(const LocalRing& A, const std::vector<Polynomial>& seq, unsigned exp_bound) {
  return strong_dseq_check(A, seq, exp_bound, true);
}

LocalVerdict is_weak_sequence(const LocalRing& A, const std::vector<Polynomial>& seq) {
  LocalVerdict v;
  v.answer = true;
  Ideal m = A.maximal();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Ideal L = A.lift(A.ideal(std::vector<Polynomial>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i))));
    Ideal cx = colon(L, seq[i]);
    Ideal cm = colon(L, m);
    auto c = contains_local(A, cx, cm);
    if (!c.answer) {
      v.answer = false;
      v.witness = c.witness->normalized();
      v.notes.push_back("fails at " + std::to_string(i + 1));
      return v;
    }
  }
  return v;
}

LocalVerdict verify_colon_split(const LocalRing& A, const Ideal& L, const Polynomial& x, const Ideal& W,
                                const Ideal& M, unsigned n) {
  LocalVerdict v;
  Ideal La = A.lift(L);
  Ideal Ma = A.lift(M);
  auto skip = [&](std::string why) {
    v.skipped = true;
    v.answer = true;
    v.notes.push_back("skipped: " + std::move(why));
    return v;
  };
  if (n < 2) return skip("n < 2");
  if (!Ma.contains(x)) return skip("x not in M");
  for (const auto& w : W.gens()) {
    if (!A.defining().contains(x * w)) return skip("xW != 0");
  }
  Ideal Lx = colon(La, x);
  if (!equal_as_S_ideals(A.lift(colon(La, x * x)), A.lift(Lx))) return skip("L : x^2 != L : x");

  Polynomial xn = x.pow(n);
  Ideal LW = A.lift(sum(L, W));
  Ideal Lxn = A.lift(sum(L, A.ideal({xn})));
  Ideal lhs = A.lift(colon(A.lift(sum(sum(L, A.ideal({xn})), W)), M));
  Ideal c_lxn = colon(Lxn, M);
  Ideal rhs = A.lift(sum(colon(LW, M), c_lxn));
  v.answer = equal_as_S_ideals(lhs, rhs);
  if (!v.answer) {
    for (const auto& g : lhs.gens()) {
      if (!rhs.contains(g)) {
        v.witness = g.normalized();
        break;
      }
    }
    v.notes.push_back("split identity fails");
    return v;
  }
  bool sharp = equal_as_S_ideals(A.lift(Lx), A.lift(colon(La, M)));
  v.put("sharp_form_applies", sharp ? 1 : 0);
  if (sharp) {
    v.answer = equal_as_S_ideals(lhs, A.lift(c_lxn));
    if (!v.answer) {
      for (const auto& g : lhs.gens()) {
        if (!A.lift(c_lxn).contains(g)) {
          v.witness = g.normalized();
          break;
        }
      }
      v.notes.push_back("sharp form fails");
    }
  }
  return v;
}

LocalVerdict verify_strong_dseq_colon(const LocalRing& A, const std::vector<Polynomial>& seq,
                                      const std::vector<unsigned>& exps, const Ideal& M, unsigned exp_bound) {
  LocalVerdict v;
  if (exps.size() != seq.size()) throw InputError("one exponent per sequence element");
  auto skip = [&](std::string why) {
    v.skipped = true;
    v.answer = true;
    v.notes.push_back("skipped: " + std::move(why));
    return v;
  };
  for (auto e : exps) {
    if (e < 2) return skip("exponent below 2");
  }
  Ideal Ma = A.lift(M);
  for (const auto& x : seq) {
    if (!Ma.contains(x)) return skip("sequence not inside M");
  }
  if (!strong_dseq_check(A, seq, exp_bound, false).answer) return skip("not a strong d-sequence");
  Ideal W = colon(A.defining(), A.ideal(seq));
  std::vector<Polynomial> powers;
  for (std::size_t i = 0; i < seq.size(); ++i) powers.push_back(seq[i].pow(exps[i]));
  Ideal P = A.lift(A.ideal(powers));
  Ideal lhs = A.lift(colon(sum(P, W), M));
  Ideal rhs = A.lift(sum(W, colon(P, M)));
  v.answer = equal_as_S_ideals(lhs, rhs);
  if (!v.answer) {
    for (const auto& g : lhs.gens()) {
      if (!rhs.contains(g)) {
        v.witness = g.normalized();
        break;
      }
    }
  }
  return v;
}

std::vector<Polynomial> sample_sop(const LocalRing& A, unsigned depth_level, std::mt19937_64& rng, unsigned attempts) {
  if (depth_level == 0) throw InputError("depth level must be positive");
  const RingPtr& R = A.ring();
  auto mons = monomials_of_degree(*R, depth_level);
  const unsigned d = A.dim();
  for (unsigned a = 0; a < attempts; ++a) {
    std::vector<Polynomial> gens;
    for (unsigned k = 0; k < d; ++k) {
      std::vector<std::pair<Monomial, Scalar>> terms;
      for (const auto& m : mons) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        if (c != 0) terms.emplace_back(m, Scalar(R->field(), c));
      }
      Polynomial g = A.reduce(Polynomial::from_terms(R, std::move(terms)));
      if (g.is_zero()) break;
      gens.push_back(g.normalized());
    }
    if (gens.size() != d) continue;
    if (Artinian::of(A, A.ideal(gens))) return gens;
  }
  throw InputError("no system of parameters found in " + std::to_string(attempts) + " draws");
}

TypeEstimate estimate_cm_type(const LocalRing& A, unsigned depth_level, unsigned samples, std::uint64_t seed) {
  TypeEstimate t;
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    auto Q = ParamIdeal::make(A, sample_sop(A, depth_level, rng, 100 * samples));
    t.values.push_back(index_of_reducibility(A, Q));
    t.max = std::max(t.max, t.values.back());
  }
  return t;
}

LocalVerdict buchsbaum_probe(const LocalRing& A, unsigned samples, std::uint64_t seed) {
  LocalVerdict v;
  v.answer = true;
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    auto sop = sample_sop(A, 1 + s % 2, rng, 100 * samples);
    auto w = is_weak_sequence(A, sop);
    if (!w.answer) {
      v.answer = false;
      v.witness = w.witness;
      v.notes.push_back("not a weak sequence: " + join(sop));
      v.put("failing_sample", s);
      return v;
    }
  }
  v.put("samples", samples);
  return v;
}

LocalVerdict invariance_probe(const LocalRing& A, unsigned samples, std::uint64_t seed) {
  LocalVerdict v;
  std::mt19937_64 rng(seed);
  std::set<std::int64_t> seen;
  for (unsigned s = 0; s < samples; ++s) {
    auto Q = ParamIdeal::make(A, sample_sop(A, 1, rng, 100 * samples));
    auto e = multiplicity(A, Q.ideal());
    seen.insert(static_cast<std::int64_t>(Q.colength()) - static_cast<std::int64_t>(e));
  }
  v.values.assign(seen.begin(), seen.end());
  v.answer = v.values.size() == 1;
  return v;
}

unsigned krull_dim(const LocalRing& A) {
  const std::size_t n = A.ring()->arity();
  if (A.is_graded()) {
    if (A.defining().is_unit()) return 0;
    std::vector<Monomial> leads;
    for (const auto& b : A.defining().basis()) leads.push_back(b.lead_monomial());
    unsigned best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      auto size = static_cast<unsigned>(std::popcount(mask));
      if (size <= best) continue;
      bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) {
        for (std::size_t i = 0; i < n; ++i) {
          if (m.exp[i] && !(mask >> i & 1u)) return false;
        }
        return true;
      });
      if (independent) best = size;
    }
    return best;
  }
  // growth degree of n -> l(A / m^n)
  std::vector<std::uint64_t> h;
  const std::uint32_t limit = std::max<std::uint32_t>(8, limits().trunc_budget);
  for (std::uint32_t N = 1; N <= limit; ++N) {
    h.push_back(truncation_dim(A, N));
    if (N < 6) continue;
    for (unsigned d = 0; d <= n; ++d) {
      if (N < d + 3) break;
      std::size_t i = N - d - 2;
      if (difference(h, d + 1, i) == 0 && difference(h, d + 1, i - 1) == 0) return d;
    }
  }
  throw BudgetError("dimension: Hilbert-Samuel growth did not settle");
}

unsigned depth_probe(const LocalRing& A, std::uint64_t seed) {
  const RingPtr& R = A.ring();
  const unsigned d = A.dim();
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> seq;
  auto linear = [&] {
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t i = 0; i < R->arity(); ++i) {
      long long c = static_cast<long long>(rng() % 7) - 3;
      if (c) terms.emplace_back(R->variable(i), Scalar(R->field(), c));
    }
    return Polynomial::from_terms(R, std::move(terms));
  };
  while (seq.size() < d) {
    Ideal L = A.lift(A.ideal(seq));
    bool extended = false;
    for (int attempt = 0; attempt < 8 && !extended; ++attempt) {
      Polynomial x = linear();
      if (x.is_zero()) continue;
      if (contains_local(A, colon(L, x), L).answer) {
        seq.push_back(x);
        extended = true;
      }
    }
    if (!extended) break;
  }
  return static_cast<unsigned>(seq.size());
}

}  // namespace socle
