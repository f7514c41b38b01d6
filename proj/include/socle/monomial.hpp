#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace socle {

/// Hard arity ceiling, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::uint16_t;

/// Exponent vector with cached total and weighted degree. Entries past the
/// ring's arity are always zero.
struct Monomial {
  std::array<Exponent, kMaxVars> exp{};
  std::uint32_t total = 0;
  std::uint32_t weighted = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool is_one() const { return total == 0; }
};

/// a | b
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.total > b.total || a.weighted > b.weighted) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] && b.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b);

/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const std::uint32_t> weights);

/// Term orders. Every kind first compares a weighted degree, except Lex.
/// Elimination compares the leading block (weighted degree, then reverse
/// lexicographic) before looking at the trailing block at all.
class MonomialOrder {
public:
  enum class Kind { WeightedGrevlex, WeightedLex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::WeightedGrevlex, 0); }
  static MonomialOrder weighted_lex() { return MonomialOrder(Kind::WeightedLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Variables [0, block) dominate variables [block, arity).
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Elimination, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Negative, zero or positive as u <, =, > v.
  int compare(const Monomial& u, const Monomial& v, std::span<const std::uint32_t> weights) const;

  std::string name() const;

  auto operator<=>(const MonomialOrder&) const = default;

private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace socle
