#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/monomial.hpp"

namespace socle {

/// Variable names, positive weights, coefficient field.
struct RingSpec {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  Field field = Field::rationals();

  /// Throws InputError on duplicate or malformed names, zero weights,
  /// arity mismatch or too many variables.
  void validate() const;
  std::size_t arity() const { return names.size(); }
  bool operator==(const RingSpec&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[X1..Xn] with a fixed term order. Immutable.
class Ring {
public:
  static RingPtr make(RingSpec spec, MonomialOrder order = MonomialOrder::grevlex());

  const RingSpec& spec() const { return spec_; }
  std::size_t arity() const { return spec_.arity(); }
  const Field& field() const { return spec_.field; }
  const std::vector<std::string>& names() const { return spec_.names; }
  std::span<const std::uint32_t> weights() const { return spec_.weights; }
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& u, const Monomial& v) const { return order_.compare(u, v, spec_.weights); }

  Monomial monomial(std::span<const int> exps) const;
  Monomial variable(std::size_t i) const;
  std::uint32_t weighted_degree(const Monomial& m) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;
  /// Structural equality: same spec and order.
  bool same_as(const Ring& o) const { return this == &o || (spec_ == o.spec_ && order_ == o.order_); }

  std::string monomial_to_string(const Monomial& m) const;

private:
  Ring(RingSpec spec, MonomialOrder order) : spec_(std::move(spec)), order_(order) {}
  RingSpec spec_;
  MonomialOrder order_;
};

}  // namespace socle
