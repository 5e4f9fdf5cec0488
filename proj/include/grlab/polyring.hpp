#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grlab/numeric.hpp"

namespace grlab {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t total_degree() const;

  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; precondition b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms strictly descending in the ambient order, no zero
/// coefficients. Only a PolyRing can establish that invariant.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  /// True iff the polynomial is a nonzero constant.
  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

enum class TermOrder { WeightedGrevlex, Lex };

std::string to_string(TermOrder order);

/// k[x1..xn] with positive integer weights and a fixed term order.
class PolyRing {
 public:
  /// Throws InvalidInputError on a nonpositive weight, a malformed or
  /// duplicate variable name, or mismatched list lengths.
  PolyRing(Field field, std::vector<std::string> names, std::vector<std::uint32_t> weights,
           TermOrder order = TermOrder::WeightedGrevlex);

  /// Standard-graded ring with variables named by the list.
  static PolyRing standard(Field field, std::vector<std::string> names,
                           TermOrder order = TermOrder::WeightedGrevlex);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  TermOrder order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables and weights with a different order.
  PolyRing with_order(TermOrder order) const;
  /// Appends one fresh variable.
  PolyRing extended(const std::string& name, std::uint32_t weight) const;
  /// Pads exponent vectors with zeros to fit a ring with more variables.
  Polynomial embed(const Polynomial& f, std::size_t extra_vars) const;

  std::uint64_t weighted_degree(const Monomial& m) const;

  /// Sign of (a - b) in the term order: positive when a is larger.
  int compare(const Monomial& a, const Monomial& b) const;

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(Rational(1)); }
  Polynomial constant(const Rational& c) const;
  Polynomial variable(std::size_t index) const;
  Polynomial monomial(const Monomial& m, const Rational& c = Rational(1)) const;
  /// Sorts and combines arbitrary terms; coefficients are mapped into the field.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, const Rational& c) const;
  /// c * m * f
  Polynomial mul_term(const Polynomial& f, const Rational& c, const Monomial& m) const;
  Polynomial pow(const Polynomial& f, unsigned n) const;
  Polynomial make_monic(const Polynomial& f) const;

  /// Formal partial derivative with respect to variable index.
  Polynomial derivative(const Polynomial& f, std::size_t index) const;

  /// Weighted degree when all terms share one; the zero polynomial has degree 0.
  std::optional<std::uint64_t> homogeneous_degree(const Polynomial& f) const;
  bool is_homogeneous(const Polynomial& f) const { return homogeneous_degree(f).has_value(); }
  std::uint64_t max_total_degree(const Polynomial& f) const;

  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  TermOrder order_;
};

/// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm of leading monomials,
/// each leading term first scaled to coefficient 1.
Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g);

}  // namespace grlab
