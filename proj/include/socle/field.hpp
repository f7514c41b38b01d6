#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace socle {

/// Raised for malformed input: bad field, arity mismatch, unknown identifiers.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation exceeds one of its configured budgets.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Coefficient domain: the rationals or a prime field.
class Field {
public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  static Field prime(std::uint64_t p);
  /// Parses "qq", "QQ", "fp:P", "FP P".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint64_t modulus() const { return p_; }

  /// "qq" or "fp:P"; the CLI flag spelling.
  std::string id() const;

  bool operator==(const Field&) const = default;

private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if ((p >> 32) == 0) return (a * b) % p;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Residue of an arbitrary integer.
std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p);

/// Coefficient arithmetic over Z/p, values kept in [0, p).
struct FpOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return r < 0 ? static_cast<value_type>(r + static_cast<long long>(p)) : static_cast<value_type>(r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return (s >= p || s < a) ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const { return mulmod(a, b, p); }
  value_type inv(value_type a) const { return powmod(a, p - 2, p); }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
};

/// Coefficient arithmetic over Q. GMP keeps every mpq_class canonical.
struct QQOps {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

/// Calls fn(FpOps) or fn(QQOps) according to the field.
template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(QQOps{});
  return fn(FpOps{f.modulus()});
}

}  // namespace detail

/// An exact element of a Field. Mixing fields throws InputError.
class Scalar {
public:
  Scalar(const Field& f, long long v);
  Scalar(const Field& f, const mpz_class& v);
  static Scalar from_fp(const Field& f, std::uint64_t v);
  static Scalar from_q(const mpq_class& v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only for prime fields.
  std::uint64_t fp_value() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& q_value() const { return std::get<mpq_class>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

  /// Rationals as "a" or "a/b"; residues in the symmetric range (-p/2, p/2].
  std::string to_string() const;

private:
  Scalar(const Field& f) : field_(f) {}
  void check(const Scalar& o) const;
  Field field_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace socle
