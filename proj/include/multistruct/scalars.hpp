#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>

#include "multistruct/errors.hpp"

namespace multistruct {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
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
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Runtime description of the coefficient field: F_p (p prime, < 2^63) or Q.
class FieldSpec {
 public:
  enum class Kind { Prime, Rationals };

  static FieldSpec prime(std::uint64_t p) {
    if (p >> 63) throw InvalidField("modulus must fit in 63 bits");
    if (!is_prime_u64(p)) throw InvalidField(std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Prime, p);
  }
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string to_string() const {
    return kind_ == Kind::Rationals ? std::string("Q") : std::to_string(p_);
  }

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Element of a prime field F_p, canonical representative in [0, p).
/// Each element carries its modulus; mixing moduli throws FieldMismatch.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
    if (p < 2) throw InvalidField("modulus must be at least 2");
    v_ = value % p;
  }

  static Fp from_int(std::int64_t value, std::uint64_t p) {
    if (p < 2) throw InvalidField("modulus must be at least 2");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;  // p < 2^63, no wrap
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    check(o);
    if (p_ <= 0xFFFFFFFFull) return raw(v_ * o.v_ % p_, p_);
    return raw(detail::mulmod_u64(v_, o.v_, p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  /// Extended Euclid; deterministic cost, no exponentiation.
  Fp inverse() const {
    if (v_ == 0) throw DivisionByZero();
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
  }

  bool operator==(const Fp& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  Fp() : v_(0), p_(2) {}
  void check(const Fp& o) const {
    if (p_ != o.p_) throw FieldMismatch();
  }
  std::uint64_t v_, p_;
};

/// Arbitrary-precision rational, always fully reduced with positive denominator.
class Rat {
 public:
  using BigInt = boost::multiprecision::cpp_int;
  using BigRat = boost::multiprecision::cpp_rational;

  Rat() : v_(0) {}
  Rat(std::int64_t n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    BigInt n(num), d(den);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    v_ = BigRat(n, d);
  }
  explicit Rat(BigRat v) : v_(std::move(v)) {}

  static Rat from_strings(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rat(BigRat(n, d));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }

  Rat operator+(const Rat& o) const { return Rat(BigRat(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(BigRat(v_ - o.v_)); }
  Rat operator-() const { return Rat(BigRat(-v_)); }
  Rat operator*(const Rat& o) const { return Rat(BigRat(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rat(BigRat(v_ / o.v_));
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rat(BigRat(1 / v_));
  }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  std::string to_string() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

 private:
  BigRat v_;
};

/// What generic code needs from a scalar type.
template <class K>
concept Field = requires(const K a, const K b) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.zero() } -> std::same_as<K>;
  { a.one() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Bridges the runtime FieldSpec to a concrete scalar type.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Fp> {
  static bool matches(const FieldSpec& f) { return f.kind() == FieldSpec::Kind::Prime; }
  static Fp zero(const FieldSpec& f) { return Fp(0, f.modulus()); }
  static Fp one(const FieldSpec& f) { return Fp(1, f.modulus()); }
  /// Reduces an arbitrarily long decimal string mod p.
  static Fp from_decimal(const FieldSpec& f, const std::string& digits) {
    std::uint64_t p = f.modulus();
    std::uint64_t r = 0;
    for (char c : digits) {
      r = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(r) * 10 + static_cast<unsigned>(c - '0')) % p);
    }
    return Fp(r, p);
  }
  static Fp from_fraction(const FieldSpec& f, const std::string& num, const std::string& den) {
    Fp n = from_decimal(f, num);
    Fp d = from_decimal(f, den);
    return n / d;  // throws DivisionByZero when den ≡ 0 (mod p)
  }
};

template <>
struct FieldOps<Rat> {
  static bool matches(const FieldSpec& f) { return f.kind() == FieldSpec::Kind::Rationals; }
  static Rat zero(const FieldSpec&) { return Rat(); }
  static Rat one(const FieldSpec&) { return Rat(1); }
  static Rat from_decimal(const FieldSpec&, const std::string& digits) {
    return Rat(Rat::BigRat(Rat::BigInt(digits)));
  }
  static Rat from_fraction(const FieldSpec&, const std::string& num, const std::string& den) {
    return Rat::from_strings(num, den);
  }
};

/// Parses the text form: an optional '-', then digits or digits/digits.
template <Field K>
K parse_scalar(const FieldSpec& f, const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto bad = [&] { throw InvalidField("bad scalar literal '" + text + "'"); };
  if (s.empty()) bad();
  std::string num, den;
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    num = s;
    den = "1";
  } else {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (num.empty() || den.empty()) bad();
  for (char c : num)
    if (c < '0' || c > '9') bad();
  for (char c : den)
    if (c < '0' || c > '9') bad();
  K v = FieldOps<K>::from_fraction(f, num, den);
  return neg ? -v : v;
}

}  // namespace multistruct
