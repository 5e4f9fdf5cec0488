#pragma once

#include <cstdint>
#include <vector>

#include "grlab/polyring.hpp"

namespace grlab::testing {

// GF(p^k) with logarithm tables for multiplication. Elements are 0..q-1, read as base-p digit
// vectors of polynomials modulo a monic irreducible of degree k.
class SmallField {
 public:
  SmallField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
    modulus_ = find_irreducible();
    // Discrete log tables from a generator of the multiplicative group.
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    for (std::uint32_t g = 2; g < q_ || q_ == 2; ++g) {
      std::uint32_t gen = q_ == 2 ? 1 : g;
      std::uint32_t x = 1;
      bool generator = true;
      for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (e > 0 && x == 1) {
          generator = false;
          break;
        }
        exp_[e] = x;
        x = encode(poly_mulmod(decode(x), decode(gen)));
      }
      if (generator) break;
    }
    for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
  }

  std::uint32_t size() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, place *= p_) r += (a % p_ + b % p_) % p_ * place;
    return r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
  }

  // Image of a rational with denominator prime to p.
  std::uint32_t from_rational(const Rational& r) const {
    long num = BigInt(r.numerator() % p_).get_si();
    if (num < 0) num += p_;
    long den = BigInt(r.denominator() % p_).get_si();
    std::uint32_t inv = 1;
    for (std::uint32_t e = 0; e < p_ - 2; ++e) inv = static_cast<std::uint32_t>(inv * den % p_);
    return static_cast<std::uint32_t>(num * inv % p_);
  }

  // Polynomial with coefficients mapped into the field, for fast evaluation.
  struct Compiled {
    std::vector<std::pair<std::uint32_t, std::vector<Exponent>>> terms;
  };

  Compiled compile(const Polynomial& f) const {
    Compiled c;
    for (const Term& t : f.terms()) {
      std::uint32_t v = from_rational(t.coeff);
      if (v != 0) c.terms.emplace_back(v, std::vector<Exponent>(t.mono.exponents().begin(), t.mono.exponents().end()));
    }
    return c;
  }

  std::uint32_t eval(const Compiled& f, const std::vector<std::uint32_t>& point) const {
    std::uint32_t acc = 0;
    for (const auto& [coeff, exps] : f.terms) {
      std::uint32_t v = coeff;
      for (std::size_t i = 0; i < point.size() && v != 0; ++i)
        for (Exponent e = 0; e < exps[i]; ++e) v = mul(v, point[i]);
      acc = add(acc, v);
    }
    return acc;
  }

 private:
  using Digits = std::vector<std::uint32_t>;

  Digits decode(std::uint32_t a) const {
    Digits d(k_);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  std::uint32_t encode(const Digits& d) const {
    std::uint32_t a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }
  Digits poly_mulmod(const Digits& a, const Digits& b) const {
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    // Reduce with t^k = -(m_0 + ... + m_{k-1} t^{k-1}).
    for (std::uint32_t d = 2 * k_ - 1; d >= k_; --d) {
      std::uint64_t c = prod[d];
      prod[d] = 0;
      for (std::uint32_t i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
    Digits r(k_);
    for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }
  // Lowest monic polynomial of degree k <= 3 without roots in GF(p), which is
  // irreducible for those degrees.
  Digits find_irreducible() const {
    if (k_ == 1) return Digits{0};
    std::uint32_t count = q_;
    for (std::uint32_t code = 0; code < count; ++code) {
      Digits m = decode(code);
      bool root = false;
      for (std::uint64_t x = 0; x < p_ && !root; ++x) {
        std::uint64_t v = 1;  // leading t^k
        for (std::uint32_t i = k_; i-- > 0;) v = (v * x + m[i]) % p_;
        root = v == 0;
      }
      if (!root) return m;
    }
    return {};
  }

  std::uint32_t p_, k_, q_;
  Digits modulus_;
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace grlab::testing
