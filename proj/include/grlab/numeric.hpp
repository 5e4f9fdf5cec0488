#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "grlab/errors.hpp"

namespace grlab {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}

  /// Canonical n/d. Throws DivisionByZeroError when d = 0.
  static Rational normalize(const BigInt& numerator, const BigInt& denominator);

  /// Parses "n" or "n/d" (optionally signed).
  static Rational from_string(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }

  std::string to_string() const { return value_.get_str(); }
  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

/// Largest modulus accepted for prime fields; products fit in 64 bits.
inline constexpr std::uint64_t kMaxPrimeModulus = (std::uint64_t{1} << 31) - 1;

/// Deterministic trial-division primality test, adequate below 2^31.
bool is_prime(std::uint64_t n);

/// Element of Z/pZ, p prime, value reduced into [0, p).
class PrimeFieldElement {
 public:
  /// Throws InvalidInputError unless p is a prime below 2^31.
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement inverse() const;

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b) { return a * b.inverse(); }
  PrimeFieldElement operator-() const;
  friend bool operator==(PrimeFieldElement a, PrimeFieldElement b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Unchecked {};
  PrimeFieldElement(std::uint32_t value, std::uint32_t modulus, Unchecked)
      : value_(value), modulus_(modulus) {}

  std::uint32_t value_;
  std::uint32_t modulus_;
};

struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t p = 0;

  static FieldSpec rational() { return {}; }
  /// Throws InvalidInputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  std::uint32_t characteristic() const { return is_rational() ? 0 : p; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Arithmetic over the coefficient field. Coefficients are always carried as
/// Rational; over GF(p) they are integers in [0, p).
class Field {
 public:
  Field() = default;
  explicit Field(FieldSpec spec) : spec_(spec) {}

  const FieldSpec& spec() const { return spec_; }
  bool is_rational() const { return spec_.is_rational(); }
  std::uint32_t characteristic() const { return spec_.characteristic(); }

  /// Maps a rational literal into the field; throws DivisionByZeroError when
  /// the denominator vanishes mod p.
  Rational from_rational(const Rational& r) const;
  Rational from_integer(long v) const { return from_rational(Rational(v)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws DivisionByZeroError for a = 0.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// Symmetric representative for display: over GF(p) values above p/2 are
  /// shown as negatives.
  Rational display(const Rational& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  std::uint64_t residue(const Rational& a) const { return a.numerator().get_ui(); }

  FieldSpec spec_;
};

}  // namespace grlab
