#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Per-thread computation limits.
struct Limits {
  std::uint64_t step_budget = 10'000'000;  // reduction steps per basis computation
  unsigned trunc_budget = 40;              // largest truncation level tried
};

Limits& limits();

/// Installs limits for the current thread until destroyed.
class LimitsScope {
public:
  explicit LimitsScope(Limits l) : saved_(limits()) { limits() = l; }
  ~LimitsScope() { limits() = saved_; }
  LimitsScope(const LimitsScope&) = delete;
  LimitsScope& operator=(const LimitsScope&) = delete;

private:
  Limits saved_;
};

/// Reduced Groebner basis in the order of R, monic, sorted by descending
/// lead monomial. Inputs must live in a ring with R's spec.
std::vector<Polynomial> groebner_basis(const RingPtr& R, const std::vector<Polynomial>& gens);

/// Full reduction of f by a Groebner basis living in f's ring. Terms of total
/// degree >= trunc are discarded when trunc > 0.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, std::uint32_t trunc = 0);

/// Reduced basis of (gens) + m^K, computed in the unit-weight grevlex copy of
/// the ring with every term of total degree >= K discarded. The monomials of
/// degree K are implicit and not listed.
struct TruncatedBasis {
  RingPtr ring;
  std::uint32_t level = 0;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  bool is_unit() const;
};

TruncatedBasis truncated_basis(const RingPtr& R, const std::vector<Polynomial>& gens, std::uint32_t K);

/// Unit-weight grevlex ring with the same variables and field.
RingPtr unit_grevlex(const Ring& R);

/// Monomials of total degree < K divisible by no lead, in ascending
/// total degree. Throws BudgetError beyond `cap` monomials.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, std::size_t arity, std::uint32_t K,
                                         std::size_t cap);
std::uint64_t count_standard_monomials(const std::vector<Monomial>& leads, std::size_t arity, std::uint32_t K,
                                       std::uint64_t cap);

/// Finitely generated ideal of a polynomial ring with cached reduced bases.
/// Copies share the cache; concurrent readers are safe.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  explicit Ideal(RingPtr ring) : Ideal(ring, {}) {}
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Reduced basis in the ring's own order.
  const std::vector<Polynomial>& basis() const;
  /// Reduced basis for another order; elements live in ring()->with_order(order).
  const std::vector<Polynomial>& basis(const MonomialOrder& order) const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& o) const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  /// All generators weighted-homogeneous.
  bool is_homogeneous() const;

  std::string to_string() const;

private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Generators of J intersected with the subring on `keep`, as elements of J's ring.
Ideal eliminate(const Ideal& J, const std::vector<std::size_t>& keep);

}  // namespace socle
