#include "grlab/numeric.hpp"

#include <cctype>

namespace grlab {

Rational Rational::normalize(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZeroError();
  Rational r;
  r.value_ = mpq_class(numerator, denominator);
  r.value_.canonicalize();
  return r;
}

Rational Rational::from_string(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("malformed rational '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  return normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError();
  value_ /= o.value_;
  return *this;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_modulus(std::uint64_t p) {
  if (p > kMaxPrimeModulus || !is_prime(p))
    throw InvalidInputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  check_modulus(modulus);
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw DivisionByZeroError();
  return {static_cast<std::uint32_t>(pow_mod(value_, modulus_ - 2, modulus_)), modulus_, Unchecked{}};
}

PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
  std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return {static_cast<std::uint32_t>(s), a.modulus_, PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) { return a + (-b); }

PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
  return {static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_), a.modulus_,
          PrimeFieldElement::Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {value_ == 0 ? 0 : modulus_ - value_, modulus_, Unchecked{}};
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  check_modulus(p);
  return {Kind::Prime, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const { return is_rational() ? "QQ" : "GF(" + std::to_string(p) + ")"; }

Rational Field::from_rational(const Rational& r) const {
  if (is_rational()) return r;
  BigInt num = r.numerator() % spec_.p;
  if (num < 0) num += spec_.p;
  BigInt den = r.denominator() % spec_.p;
  if (den == 0) throw DivisionByZeroError();
  std::uint64_t inv = pow_mod(den.get_ui(), spec_.p - 2, spec_.p);
  return Rational(static_cast<long>(num.get_ui() * inv % spec_.p));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (is_rational()) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  if (s >= spec_.p) s -= spec_.p;
  return Rational(static_cast<long>(s));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (is_rational()) return a - b;
  return add(a, neg(b));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (is_rational()) return a * b;
  return Rational(static_cast<long>(residue(a) * residue(b) % spec_.p));
}

Rational Field::neg(const Rational& a) const {
  if (is_rational()) return -a;
  std::uint64_t v = residue(a);
  return Rational(static_cast<long>(v == 0 ? 0 : spec_.p - v));
}

Rational Field::inv(const Rational& a) const {
  if (a.is_zero()) throw DivisionByZeroError();
  if (is_rational()) return a.inverse();
  return Rational(static_cast<long>(pow_mod(residue(a), spec_.p - 2, spec_.p)));
}

Rational Field::display(const Rational& a) const {
  if (is_rational()) return a;
  std::uint64_t v = residue(a);
  if (v > spec_.p / 2) return Rational(static_cast<long>(v) - static_cast<long>(spec_.p));
  return a;
}

}  // namespace grlab
