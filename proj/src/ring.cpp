#include "socle/ring.hpp"

#include <cctype>
#include <set>

namespace socle {

void RingSpec::validate() const {
  if (names.empty()) throw InputError("ring has no variables");
  if (names.size() > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables supported");
  if (weights.size() != names.size()) {
    throw InputError("weight count " + std::to_string(weights.size()) + " does not match variable count " +
                     std::to_string(names.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw InputError("bad variable name '" + n + "'");
    }
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) throw InputError("bad variable name '" + n + "'");
    }
    if (!seen.insert(n).second) throw InputError("duplicate variable '" + n + "'");
  }
  for (auto w : weights) {
    if (w < 1) throw InputError("weights must be >= 1");
  }
}

RingPtr Ring::make(RingSpec spec, MonomialOrder order) {
  spec.validate();
  if (order.kind() == MonomialOrder::Kind::Elimination && (order.block() == 0 || order.block() >= spec.arity())) {
    throw InputError("elimination block must split the variables");
  }
  return RingPtr(new Ring(std::move(spec), order));
}

Monomial Ring::monomial(std::span<const int> exps) const {
  if (exps.size() != arity()) throw InputError("exponent vector length does not match ring arity");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 65535) throw InputError("exponent out of range");
    m.exp[i] = static_cast<Exponent>(exps[i]);
    m.total += exps[i];
    m.weighted += exps[i] * spec_.weights[i];
  }
  return m;
}

Monomial Ring::variable(std::size_t i) const {
  if (i >= arity()) throw InputError("variable index out of range");
  Monomial m;
  m.exp[i] = 1;
  m.total = 1;
  m.weighted = spec_.weights[i];
  return m;
}

std::uint32_t Ring::weighted_degree(const Monomial& m) const {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < arity(); ++i) d += m.exp[i] * spec_.weights[i];
  return d;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < arity(); ++i) {
    if (spec_.names[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make(spec_, order);
}

std::string Ring::monomial_to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += '*';
    s += spec_.names[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace socle
