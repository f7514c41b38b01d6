#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

/// Parallel monomial/coefficient arrays, strictly descending in the ring order.
template <class C>
struct Terms {
  std::vector<Monomial> mon;
  std::vector<C> coef;

  std::size_t size() const { return mon.size(); }
  bool empty() const { return mon.empty(); }
  void push(const Monomial& m, C c) {
    mon.push_back(m);
    coef.push_back(std::move(c));
  }
  bool operator==(const Terms&) const = default;
};

using TermData = std::variant<Terms<std::uint64_t>, Terms<mpq_class>>;

/// Sparse polynomial over the ring's field. Immutable value type.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermData data);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms);

  const RingPtr& ring() const { return ring_; }
  const TermData& data() const { return data_; }

  bool is_zero() const;
  std::size_t size() const;
  Monomial monomial(std::size_t i) const;
  Scalar coeff(std::size_t i) const;
  Monomial lead_monomial() const;
  Scalar lead_coeff() const;
  Scalar constant_term() const;

  /// Common weighted degree of all terms, or nullopt. Throws on zero.
  std::optional<std::uint32_t> weighted_degree() const;
  bool is_homogeneous() const { return weighted_degree().has_value(); }
  std::uint32_t min_total_degree() const;
  std::uint32_t max_total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  /// Lead coefficient 1.
  Polynomial monic() const;
  /// Display normalization: monic over a prime field, positive lead over Q.
  Polynomial normalized() const;
  /// Drops every term of total degree >= k.
  Polynomial truncated(std::uint32_t k) const;
  /// Re-expresses in `target`; source variable i becomes target variable map[i].
  Polynomial mapped(RingPtr target, std::span<const std::size_t> map) const;
  /// Same terms, re-sorted for a ring with the same spec and another order.
  Polynomial in_ring(RingPtr target) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

private:
  void check(const Polynomial& o) const;
  RingPtr ring_;
  TermData data_;
};

/// Throws InputError unless both rings are structurally identical.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace socle
