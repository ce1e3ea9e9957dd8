#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (GMP-backed) and
// small prime fields Z/p. No floating point anywhere; every operation is
// exact. Values are immutable in use: all operations return new values.
//
// Serialization contract:
//   rationals     "n" or "n/d" with d > 0 and gcd(n,d) = 1
//   prime fields  decimal residue in [0, p)

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopf {

struct field_error : std::runtime_error {
  explicit field_error(const std::string& m) : std::runtime_error(m) {}
};

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runtime description of the coefficient field; the interchange-format side
// of the templated field types below.
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  uint32_t p = 0;  // characteristic, prime kind only

  static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }
  static FieldSpec prime(uint32_t p) {
    if (!is_prime_u32(p)) throw field_error("characteristic must be a prime >= 2, got " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
  }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

// ---------------------------------------------------------------------------
// Rationals

class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw field_error("zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat::raw(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat::raw(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat::raw(a.v_ * b.v_); }
  friend Rat operator-(const Rat& a) { return Rat::raw(-a.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw field_error("division by zero");
    return Rat::raw(a.v_ / b.v_);
  }
  Rat inverse() const {
    if (is_zero()) throw field_error("inverse of zero");
    return Rat::raw(1 / v_);
  }
  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  // Total order, used only for deterministic sorting of outputs.
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw_value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  static Rat raw(mpq_class v) {
    Rat r;
    r.v_ = std::move(v);
    return r;  // gmp keeps mpq_class canonical under arithmetic
  }

 private:
  mpq_class v_;
};

struct RatField {
  using Elem = Rat;
  static constexpr bool is_rational = true;

  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }
  Rat from_int(long n) const { return Rat(n); }
  uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rational(); }
  std::string name() const { return "Q"; }
  bool operator==(const RatField&) const { return true; }

  Rat parse(const std::string& s) const {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw field_error("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw field_error("zero denominator: '" + s + "'");
    v.canonicalize();
    return Rat::raw(v);
  }
};

// ---------------------------------------------------------------------------
// Prime fields Z/p, canonical residues in [0, p). Each value carries its
// modulus so mixed-field bugs surface immediately.

class Zp {
 public:
  Zp() : p_(0), v_(0) {}
  Zp(uint32_t p, uint64_t v) : p_(p), v_(static_cast<uint32_t>(v % p)) {}

  uint32_t modulus() const { return p_; }
  uint32_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % p_; }

  friend Zp operator+(Zp a, Zp b) {
    a.check(b);
    uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Zp::raw(a.p_, s);
  }
  friend Zp operator-(Zp a, Zp b) {
    a.check(b);
    uint32_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
    return Zp::raw(a.p_, s);
  }
  friend Zp operator*(Zp a, Zp b) {
    a.check(b);
    return Zp::raw(a.p_, static_cast<uint32_t>((uint64_t)a.v_ * b.v_ % a.p_));
  }
  friend Zp operator-(Zp a) { return Zp::raw(a.p_, a.v_ == 0 ? 0 : a.p_ - a.v_); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp inverse() const {
    if (v_ == 0) throw field_error("inverse of zero");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return Zp::raw(p_, static_cast<uint32_t>(t));
  }
  Zp& operator+=(Zp b) { *this = *this + b; return *this; }
  Zp& operator-=(Zp b) { *this = *this - b; return *this; }
  Zp& operator*=(Zp b) { *this = *this * b; return *this; }

  friend bool operator==(Zp a, Zp b) { a.check(b); return a.v_ == b.v_; }
  friend bool operator!=(Zp a, Zp b) { return !(a == b); }
  friend bool operator<(Zp a, Zp b) { a.check(b); return a.v_ < b.v_; }

  std::string to_string() const { return std::to_string(v_); }

  static Zp raw(uint32_t p, uint32_t v) {
    Zp z;
    z.p_ = p;
    z.v_ = v;
    return z;
  }

 private:
  void check(const Zp& o) const {
    if (p_ != o.p_) throw field_error("mixed prime-field moduli");
  }
  uint32_t p_, v_;
};

struct ZpField {
  using Elem = Zp;
  static constexpr bool is_rational = false;

  uint32_t p = 0;

  ZpField() = default;
  explicit ZpField(uint32_t prime) : p(prime) {
    if (!is_prime_u32(p)) throw field_error("characteristic must be a prime >= 2, got " + std::to_string(p));
  }

  Zp zero() const { return Zp(p, 0); }
  Zp one() const { return Zp(p, 1); }
  Zp from_int(long n) const {
    int64_t r = n % (int64_t)p;
    if (r < 0) r += p;
    return Zp(p, (uint64_t)r);
  }
  uint32_t characteristic() const { return p; }
  FieldSpec spec() const { return FieldSpec::prime(p); }
  std::string name() const { return "F" + std::to_string(p); }
  bool operator==(const ZpField& o) const { return p == o.p; }

  Zp parse(const std::string& s) const {
    if (s.empty()) throw field_error("empty scalar literal");
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw field_error("bad residue literal: '" + s + "'");
    mpz_class r = z % p;
    if (r < 0) r += p;
    return Zp(p, r.get_ui());
  }
};

}  // namespace hopf
