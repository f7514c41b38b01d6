#include "socle/field.hpp"

#include <cctype>

namespace socle {

namespace detail {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  std::uint64_t out = 0;
  if (sgn(r) != 0) mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace detail

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "qq") return rationals();
  std::string digits;
  if (t.rfind("fp:", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("fp ", 0) == 0) {
    digits = t.substr(3);
  } else {
    throw InputError("unknown field '" + text + "' (expected qq or fp:P)");
  }
  if (digits.empty() || digits.size() > 20) throw InputError("bad field modulus in '" + text + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad field modulus in '" + text + "'");
  }
  mpz_class z(digits);
  if (z > mpz_class("18446744073709551615")) throw InputError("field modulus exceeds 64 bits");
  std::uint64_t p = 0;
  mpz_export(&p, nullptr, 1, sizeof(p), 0, 0, z.get_mpz_t());
  return prime(p);
}

std::string Field::id() const {
  return is_rational() ? "qq" : "fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long long v) : field_(f) {
  if (f.is_rational()) {
    v_ = detail::QQOps{}.from_int(v);
  } else {
    v_ = detail::FpOps{f.modulus()}.from_int(v);
  }
}

Scalar::Scalar(const Field& f, const mpz_class& v) : field_(f) {
  if (f.is_rational()) {
    v_ = mpq_class(v);
  } else {
    v_ = detail::reduce_mod(v, f.modulus());
  }
}

Scalar Scalar::from_fp(const Field& f, std::uint64_t v) {
  Scalar s(f);
  s.v_ = v % f.modulus();
  return s;
}

Scalar Scalar::from_q(const mpq_class& v) {
  Scalar s(Field::rationals());
  mpq_class c = v;
  c.canonicalize();
  s.v_ = c;
  return s;
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw InputError("arithmetic on scalars of different fields");
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(q_value()) == 0;
  return fp_value() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return q_value() == 1;
  return fp_value() == 1;
}

namespace {
template <class Op>
Scalar combine(const Field& f, const Scalar& a, const Scalar& b, Op op) {
  if (f.is_rational()) return Scalar::from_q(op(detail::QQOps{}, a.q_value(), b.q_value()));
  return Scalar::from_fp(f, op(detail::FpOps{f.modulus()}, a.fp_value(), b.fp_value()));
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  return combine(field_, *this, o, [](auto ops, const auto& x, const auto& y) { return ops.add(x, y); });
}
Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  return combine(field_, *this, o, [](auto ops, const auto& x, const auto& y) { return ops.sub(x, y); });
}
Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  return combine(field_, *this, o, [](auto ops, const auto& x, const auto& y) { return ops.mul(x, y); });
}
Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  return combine(field_, *this, o, [](auto ops, const auto& x, const auto& y) { return ops.div(x, y); });
}
Scalar Scalar::operator-() const {
  return Scalar(field_, 0) - *this;
}
bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && v_ == o.v_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_value().get_str();
  std::uint64_t p = field_.modulus();
  std::uint64_t v = fp_value();
  if (v > p / 2) return "-" + std::to_string(p - v);
  return std::to_string(v);
}

}  // namespace socle
