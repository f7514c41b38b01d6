#include "socle/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace socle {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.exp[i]) + b.exp[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<Exponent>(s);
  }
  r.total = a.total + b.total;
  r.weighted = a.weighted + b.weighted;
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<Exponent>(b.exp[i] - a.exp[i]);
  r.total = b.total - a.total;
  r.weighted = b.weighted - a.weighted;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const std::uint32_t> weights) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.total += r.exp[i];
    if (i < weights.size()) r.weighted += r.exp[i] * weights[i];
  }
  return r;
}

namespace {

int revlex(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (u.exp[i] != v.exp[i]) return u.exp[i] < v.exp[i] ? 1 : -1;
  }
  return 0;
}

int lexcmp(const Monomial& u, const Monomial& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (u.exp[i] != v.exp[i]) return u.exp[i] > v.exp[i] ? 1 : -1;
  }
  return 0;
}

std::uint64_t block_degree(const Monomial& u, std::span<const std::uint32_t> w, std::size_t lo, std::size_t hi) {
  std::uint64_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += std::uint64_t(u.exp[i]) * w[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v, std::span<const std::uint32_t> weights) const {
  const std::size_t n = weights.size();
  switch (kind_) {
    case Kind::WeightedGrevlex:
      if (u.weighted != v.weighted) return u.weighted > v.weighted ? 1 : -1;
      return revlex(u, v, 0, n);
    case Kind::WeightedLex:
      if (u.weighted != v.weighted) return u.weighted > v.weighted ? 1 : -1;
      return lexcmp(u, v, n);
    case Kind::Lex:
      return lexcmp(u, v, n);
    case Kind::Elimination: {
      std::uint64_t du = block_degree(u, weights, 0, block_);
      std::uint64_t dv = block_degree(v, weights, 0, block_);
      if (du != dv) return du > dv ? 1 : -1;
      if (int c = revlex(u, v, 0, block_)) return c;
      if (u.weighted != v.weighted) return u.weighted > v.weighted ? 1 : -1;
      return revlex(u, v, block_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::WeightedGrevlex: return "wgrevlex";
    case Kind::WeightedLex: return "wlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace socle
