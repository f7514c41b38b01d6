#pragma once

#include <random>

#include "socle/groebner.hpp"
#include "socle/polynomial.hpp"
#include "socle/ringfile.hpp"

namespace socle::testing {

inline RingPtr make_ring(std::vector<std::string> names, std::vector<std::uint32_t> weights = {},
                         Field field = Field::rationals(), MonomialOrder order = MonomialOrder::grevlex()) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return Ring::make(RingSpec{std::move(names), std::move(weights), field}, order);
}

inline Polynomial var(const RingPtr& R, const std::string& name) {
  return Polynomial::variable(R, *R->index_of(name));
}

inline Polynomial cst(const RingPtr& R, long long c) { return Polynomial::constant(R, c); }

inline Monomial random_monomial(const RingPtr& R, std::mt19937_64& rng, int max_exp) {
  std::vector<int> e(R->arity());
  for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
  return R->monomial(e);
}

inline Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int terms, int max_exp) {
  std::vector<std::pair<Monomial, Scalar>> t;
  for (int i = 0; i < terms; ++i) {
    long long c = static_cast<long long>(rng() % 19) - 9;
    t.emplace_back(random_monomial(R, rng, max_exp), Scalar(R->field(), c));
  }
  return Polynomial::from_terms(R, std::move(t));
}

inline Polynomial P(const RingPtr& R, std::string_view text) { return parse_polynomial(R, text); }

inline Ideal ideal(const RingPtr& R, std::string_view text) { return Ideal(R, parse_polynomial_list(R, text)); }

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace socle::testing
