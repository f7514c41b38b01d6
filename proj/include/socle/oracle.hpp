#pragma once

// Brute-force linear algebra in T_K = S / (a + m^K). Columns are all
// monomials of total degree < K, lowest degree first, so the basis of T_K is
// compatible with the m-adic filtration and T_K is the truncation of T_(K+1).
// Nothing here goes through Groebner bases.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/local.hpp"

namespace socle::oracle {

struct Options {
  /// Defaults to F_32003 for rational input; a prime-field ring always keeps
  /// its own field.
  std::optional<Field> field;
  /// Largest allowed dim T_K.
  std::size_t cap = 20000;
};

Field oracle_field(const LocalRing& A, const Options& opts);

class TruncatedAlgebra;

/// A linear subspace of some T_K in reduced echelon form.
class Subspace {
public:
  std::size_t dim() const;
  std::size_t codim() const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  /// Span of all products; the ideal product when both are ideals.
  Subspace product(const Subspace& other) const;
  /// Echelon rows as text, one per row; identical input gives identical rows.
  std::vector<std::string> rows() const;

  struct Data;

private:
  friend class TruncatedAlgebra;
  struct Handle;
  explicit Subspace(std::shared_ptr<const Handle> h) : h_(std::move(h)) {}
  std::shared_ptr<const Handle> h_;
};

class TruncatedAlgebra {
public:
  /// Throws BudgetError when dim T_K exceeds the cap, InputError for K = 0.
  static TruncatedAlgebra make(const LocalRing& A, std::uint32_t K, const Options& opts = {});

  std::uint32_t level() const;
  std::size_t dim() const;
  const Field& field() const;
  /// Standard monomials, as text, in column order.
  std::vector<std::string> basis() const;

  Subspace zero() const;
  Subspace subspace_of(const Ideal& J) const;
  /// {v : v * k in J for every generator k of K2}.
  Subspace colon(const Subspace& J, const Ideal& K2) const;
  /// (0 : m), keeping only the elements that stay socle elements at K + 1.
  Subspace socle() const;
  /// Class of f lies in J.
  bool contains(const Subspace& J, const Polynomial& f) const;
  /// Commutativity and associativity on random basis triples.
  bool check_ring_axioms(unsigned triples, std::uint64_t seed) const;

  struct Impl;

private:
  explicit TruncatedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A decision together with the truncation it was made at.
struct Answer {
  bool value = false;
  std::uint64_t number = 0;
  std::uint32_t level = 0;
  std::size_t dim = 0;
};

/// l(A / J), with the first level K at which the codimension of J in T_K
/// equals that in T_(K+1). nullopt when no level within the cap does.
std::optional<Answer> length(const LocalRing& A, const Ideal& J, const Options& opts = {});
/// J1 = J2 for m-primary J1, J2.
Answer equal(const LocalRing& A, const Ideal& J1, const Ideal& J2, const Options& opts = {});
/// f in J for m-primary J.
Answer contains(const LocalRing& A, const Ideal& J, const Polynomial& f, const Options& opts = {});
/// Q : m = I; number is the index of reducibility.
Answer socle_matches(const LocalRing& A, const Ideal& Q, const Ideal& I, const Options& opts = {});
/// I^2 = QI for I = Q : m computed by linear algebra; number is the index.
Answer i2_eq_qi(const LocalRing& A, const Ideal& Q, const Options& opts = {});
/// Least n <= cap with I^(n+1) = Q I^n, as `number`; nullopt when none is.
std::optional<Answer> reduction_number(const LocalRing& A, const Ideal& Q, unsigned cap, const Options& opts = {});

}  // namespace socle::oracle
