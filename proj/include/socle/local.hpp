#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/ideal_ops.hpp"
#include "socle/ringfile.hpp"

namespace socle {

/// Outcome of a local check. `level` is the truncation level the decision
/// was made at, 0 when it was made with exact S-level bases.
struct LocalVerdict {
  bool answer = false;
  bool skipped = false;
  std::uint32_t level = 0;
  std::vector<std::pair<std::string, std::int64_t>> observed;
  std::vector<std::int64_t> values;
  std::optional<Polynomial> witness;
  std::vector<std::string> notes;

  void put(std::string key, std::int64_t v) { observed.emplace_back(std::move(key), v); }
  std::optional<std::int64_t> get(std::string_view key) const;
};

/// A = (S / a) localized at the ideal of all variables. Ideals of A are
/// passed around as ideals of S; every operation adds a itself.
class LocalRing {
public:
  LocalRing(RingPtr ring, std::vector<Polynomial> defining);
  static LocalRing from_file(const RingFile& file);

  const RingPtr& ring() const { return ring_; }
  const Ideal& defining() const { return a_; }
  /// The defining ideal is weighted-homogeneous.
  bool is_graded() const { return graded_; }

  Ideal ideal(std::vector<Polynomial> gens) const { return Ideal(ring_, std::move(gens)); }
  Ideal maximal() const { return maximal_ideal(ring_); }
  /// a + J
  Ideal lift(const Ideal& J) const;
  /// Normal form modulo a.
  Polynomial reduce(const Polynomial& f) const { return a_.normal_form(f); }

  /// Krull dimension; cached.
  unsigned dim() const;
  /// a : m^infinity with its exponent; cached.
  const Saturation& saturation() const;
  /// Multiplicity of the maximal ideal; cached.
  std::uint64_t multiplicity() const;

private:
  struct Cache;
  RingPtr ring_;
  Ideal a_;
  bool graded_ = false;
  std::shared_ptr<Cache> cache_;
};

/// The Artinian ring A / J for a locally m-primary J, realized either by the
/// exact S-level basis (graded input) or by a truncated basis at a level K
/// with m^K contained in a + J locally.
class Artinian {
public:
  /// nullopt when a + J is not m-primary at the origin. Throws BudgetError
  /// when it is but no level up to the truncation budget certifies it.
  static std::optional<Artinian> of(const LocalRing& A, const Ideal& J);

  std::uint64_t length() const;
  std::uint32_t level() const;
  bool graded() const;

  bool contains(const Polynomial& f) const;
  /// First generator of J not in this ideal, if any.
  std::optional<Polynomial> first_outside(const Ideal& J) const;
  /// Canonical representative in the ring of A.
  Polynomial normal_form(const Polynomial& f) const;
  /// Generators of this ideal followed by lifts of (this : (g_1, ..., g_m)) / this.
  std::vector<Polynomial> colon(const std::vector<Polynomial>& g) const;
  /// Standard monomials, descending.
  const std::vector<Monomial>& basis() const;

  struct Impl;

private:
  explicit Artinian(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Length {
  bool finite = false;
  std::uint64_t length = 0;
  /// The stabilization level, or the last level tried when not finite.
  std::uint32_t level = 0;
};

/// l_A(A / J) by stable truncation.
Length stable_trunc_dim(const LocalRing& A, const Ideal& J);

/// d elements generating a locally m-primary ideal.
class ParamIdeal {
public:
  /// Throws InputError on a wrong generator count or a non-system of parameters.
  static ParamIdeal make(const LocalRing& A, std::vector<Polynomial> gens);

  const Ideal& ideal() const { return q_; }
  const std::vector<Polynomial>& gens() const { return q_.gens(); }
  const Artinian& quotient() const { return *art_; }
  std::uint64_t colength() const { return art_->length(); }

private:
  ParamIdeal(Ideal q, std::shared_ptr<const Artinian> art) : q_(std::move(q)), art_(std::move(art)) {}
  Ideal q_;
  std::shared_ptr<const Artinian> art_;
};

LocalVerdict is_sop(const LocalRing& A, const std::vector<Polynomial>& gens);

/// Q : m, as Q followed by lifts of the socle of A / Q.
Ideal socle_ideal(const LocalRing& A, const ParamIdeal& Q);

/// J1 contained in J2 locally. Exact in every case.
LocalVerdict contains_local(const LocalRing& A, const Ideal& J1, const Ideal& J2);
/// J1 = J2 locally; the witness lies in one side and not the other.
LocalVerdict check_equal_local(const LocalRing& A, const Ideal& J1, const Ideal& J2);

/// I^2 = QI for I = Q : m. Observed: index, colength_q, colength_qi,
/// colength_i2, m_i_in_m_q.
LocalVerdict check_i2_eq_qi(const LocalRing& A, const ParamIdeal& Q);

struct ReductionNumber {
  /// nullopt when no n <= cap works.
  std::optional<unsigned> value;
  unsigned cap = 0;
  /// Dimension one only: 1 + the first n with I_n = I_{n+1}, I_n = I^{n+1} : a^n.
  std::optional<unsigned> chain_bound;
  std::vector<std::uint64_t> chain_colengths;
};

/// Default cap: e - 1 in dimension one with e > 1, else 8.
ReductionNumber reduction_number(const LocalRing& A, const ParamIdeal& Q, std::optional<unsigned> cap = {});

struct HilbertSamuel {
  std::uint64_t multiplicity = 0;
  unsigned degree = 0;
  /// l(A / J^n) for n = 1, 2, ...
  std::vector<std::uint64_t> values;
};

/// Fit of n -> l(A / J^n); J = nullopt means the maximal ideal. The degree
/// is taken as dim A.
HilbertSamuel hilbert_samuel(const LocalRing& A, const std::optional<Ideal>& J);
std::uint64_t multiplicity(const LocalRing& A, const std::optional<Ideal>& J = {});

std::uint64_t index_of_reducibility(const LocalRing& A, const ParamIdeal& Q);
std::uint64_t min_gens(const LocalRing& A, const Ideal& J);

/// Generators of H^0_m(A), lifted to S.
std::vector<Polynomial> h0(const LocalRing& A);
std::uint64_t h0_length(const LocalRing& A);

/// m I in m Q, and m I^n = m Q^n for n = 1..4.
LocalVerdict m_multiples_check(const LocalRing& A, const ParamIdeal& Q);

LocalVerdict is_d_sequence(const LocalRing& A, const std::vector<Polynomial>& seq);
/// Every exponent tuple in [1, exp_bound]^s.
LocalVerdict is_strong_d_sequence(const LocalRing& A, const std::vector<Polynomial>& seq, unsigned exp_bound);
LocalVerdict is_weak_sequence(const LocalRing& A, const std::vector<Polynomial>& seq);

/// (L + (x^n) + W) : M = [(L + W) : M] + [(L + (x^n)) : M] in S / a, given
/// L : x^2 = L : x, xW = 0, x in M and n >= 2; plus the sharper form when
/// L : x = L : M. Skipped when a hypothesis fails.
LocalVerdict verify_colon_split(const LocalRing& A, const Ideal& L, const Polynomial& x, const Ideal& W,
                                const Ideal& M, unsigned n);
/// [(x_1^n_1, ..., x_s^n_s) + W] : M = W + [(x_1^n_1, ..., x_s^n_s) : M] in
/// S / a for W = 0 : (seq), given seq strong d-sequence up to exponent
/// exp_bound, (seq) in M and every n_i >= 2.
LocalVerdict verify_strong_dseq_colon(const LocalRing& A, const std::vector<Polynomial>& seq,
                                      const std::vector<unsigned>& exps, const Ideal& M, unsigned exp_bound = 2);

/// Random system of parameters: combinations with coefficients in [-3, 3]
/// of the monomials of total degree depth_level, reduced modulo a.
std::vector<Polynomial> sample_sop(const LocalRing& A, unsigned depth_level, std::mt19937_64& rng,
                                   unsigned attempts = 100);

struct TypeEstimate {
  std::uint64_t max = 0;
  std::vector<std::uint64_t> values;
};
/// Indices of reducibility over sampled parameter ideals in m^depth_level.
TypeEstimate estimate_cm_type(const LocalRing& A, unsigned depth_level, unsigned samples, std::uint64_t seed);

/// Weak-sequence test over sampled systems of parameters; fails with the
/// first offending system.
LocalVerdict buchsbaum_probe(const LocalRing& A, unsigned samples, std::uint64_t seed);
/// Distinct values of l(A/Q) - e_Q(A) over sampled Q, in `values`.
LocalVerdict invariance_probe(const LocalRing& A, unsigned samples, std::uint64_t seed);

unsigned krull_dim(const LocalRing& A);
/// Length of a greedily found regular sequence; a lower bound for depth.
unsigned depth_probe(const LocalRing& A, std::uint64_t seed = 1);

}  // namespace socle
