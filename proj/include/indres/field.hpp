// Exact field scalars: arbitrary-precision rationals (GMP) and prime fields F_p.
//
// Every scalar carries its field descriptor; mixing descriptors in one
// operation is a hard error. No floating point anywhere.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace indres {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldDescriptor {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint64_t characteristic = 0;  // 0 for Q, prime p otherwise

  static FieldDescriptor rationals() { return {Kind::rationals, 0}; }

  static FieldDescriptor prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail("field: characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) fail("field: prime too large");
    return {Kind::prime_field, p};
  }

  // "Q" or "F<p>"
  static FieldDescriptor parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.size() >= 2 && s[0] == 'F') {
      std::uint64_t p = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') fail("field: bad descriptor '" + std::string(s) + "'");
        p = p * 10 + std::uint64_t(c - '0');
        if (p >= (std::uint64_t{1} << 31)) fail("field: prime too large in '" + std::string(s) + "'");
      }
      return prime(p);
    }
    fail("field: bad descriptor '" + std::string(s) + "' (want Q or F<p>)");
  }

  bool is_rationals() const { return kind == Kind::rationals; }

  std::string str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
  }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) = default;
};

// One exact field element. Rationals are kept canonical (lowest terms,
// positive denominator); residues are kept in [0, p).
class FieldScalar {
 public:
  FieldScalar() : field_(FieldDescriptor::rationals()), v_(mpq_class(0)) {}

  static FieldScalar zero(const FieldDescriptor& f) { return from_int(f, 0); }
  static FieldScalar one(const FieldDescriptor& f) { return from_int(f, 1); }

  static FieldScalar from_int(const FieldDescriptor& f, long n) {
    FieldScalar s;
    s.field_ = f;
    if (f.is_rationals()) {
      s.v_ = mpq_class(n);
    } else {
      std::int64_t r = n % std::int64_t(f.characteristic);
      if (r < 0) r += std::int64_t(f.characteristic);
      s.v_ = std::uint64_t(r);
    }
    return s;
  }

  static FieldScalar rational(long num, long den) {
    if (den == 0) fail("scalar: zero denominator");
    FieldScalar s;
    s.field_ = FieldDescriptor::rationals();
    mpq_class q(num, den);
    q.canonicalize();
    s.v_ = q;
    return s;
  }

  static FieldScalar from_mpq(mpq_class q) {
    FieldScalar s;
    s.field_ = FieldDescriptor::rationals();
    q.canonicalize();
    s.v_ = std::move(q);
    return s;
  }

  // Literal syntax: rationals "a/b" or "a" (optional leading '-');
  // prime field "k", reduced mod p.
  static FieldScalar parse(const FieldDescriptor& f, std::string_view tok) {
    if (tok.empty()) fail("scalar: empty literal");
    const std::string t(tok);
    if (!valid_literal(t, f.is_rationals()))
      fail("scalar: bad literal '" + t + "' for field " + f.str());
    if (f.is_rationals()) {
      mpq_class q;
      if (q.set_str(t, 10) != 0) fail("scalar: bad rational '" + t + "'");
      if (q.get_den() == 0) fail("scalar: zero denominator in '" + t + "'");
      q.canonicalize();
      FieldScalar s;
      s.field_ = f;
      s.v_ = q;
      return s;
    }
    mpz_class z(t, 10);
    mpz_class p(static_cast<unsigned long>(f.characteristic));
    mpz_class r = z % p;
    if (r < 0) r += p;
    FieldScalar s;
    s.field_ = f;
    s.v_ = std::uint64_t(r.get_ui());
    return s;
  }

  const FieldDescriptor& field() const { return field_; }

  bool is_zero() const {
    return field_.is_rationals() ? sgn(q()) == 0 : r() == 0;
  }
  bool is_one() const {
    return field_.is_rationals() ? q() == 1 : r() == 1;
  }

  FieldScalar operator-() const {
    FieldScalar s(*this);
    if (field_.is_rationals())
      s.v_ = mpq_class(-q());
    else
      s.v_ = r() == 0 ? std::uint64_t{0} : field_.characteristic - r();
    return s;
  }

  FieldScalar& operator+=(const FieldScalar& o) {
    match(o);
    if (field_.is_rationals())
      q() += o.q();
    else
      v_ = (r() + o.r()) % field_.characteristic;
    return *this;
  }
  FieldScalar& operator-=(const FieldScalar& o) {
    match(o);
    if (field_.is_rationals())
      q() -= o.q();
    else
      v_ = (r() + field_.characteristic - o.r()) % field_.characteristic;
    return *this;
  }
  FieldScalar& operator*=(const FieldScalar& o) {
    match(o);
    if (field_.is_rationals())
      q() *= o.q();
    else
      v_ = (r() * o.r()) % field_.characteristic;
    return *this;
  }
  FieldScalar& operator/=(const FieldScalar& o) { return *this *= o.inv(); }

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  FieldScalar inv() const {
    if (is_zero()) fail("scalar: division by zero in " + field_.str());
    FieldScalar s(*this);
    if (field_.is_rationals()) {
      s.v_ = mpq_class(1 / q());
    } else {
      // extended Euclid; p prime so any nonzero residue is invertible
      std::int64_t a = std::int64_t(r()), m = std::int64_t(field_.characteristic);
      std::int64_t x0 = 0, x1 = 1, b = m;
      while (a > 1) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        x1 -= t * x0;
        std::swap(x0, x1);
      }
      if (x1 < 0) x1 += m;
      s.v_ = std::uint64_t(x1);
    }
    return s;
  }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rationals() ? a.q() == b.q() : a.r() == b.r();
  }

  std::string str() const {
    return field_.is_rationals() ? q().get_str() : std::to_string(r());
  }

  // Rational value accessor (only meaningful over Q).
  const mpq_class& rational_value() const {
    if (!field_.is_rationals()) fail("scalar: not a rational");
    return q();
  }
  std::uint64_t residue() const {
    if (field_.is_rationals()) fail("scalar: not a residue");
    return r();
  }

 private:
  FieldDescriptor field_;
  std::variant<mpq_class, std::uint64_t> v_;

  mpq_class& q() { return std::get<mpq_class>(v_); }
  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  std::uint64_t r() const { return std::get<std::uint64_t>(v_); }

  void match(const FieldScalar& o) const {
    if (field_ != o.field_)
      fail("scalar: mixed fields " + field_.str() + " vs " + o.field_.str());
  }

  static bool valid_literal(const std::string& t, bool rationals) {
    std::size_t i = 0;
    if (i < t.size() && t[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i, ++digits;
    if (digits == 0) return false;
    if (i == t.size()) return true;
    if (!rationals || t[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i, ++digits;
    return digits > 0 && i == t.size();
  }
};

}  // namespace indres
