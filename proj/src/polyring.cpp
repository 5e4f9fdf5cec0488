#include "grlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace grlab {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
  return r;
}

std::string to_string(TermOrder order) {
  return order == TermOrder::Lex ? "lex" : "grevlex";
}

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<std::uint32_t> weights,
                   TermOrder order)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.size() != weights_.size())
    throw InvalidInputError("variable names and weights differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw InvalidInputError("invalid variable name '" + names_[i] + "'");
    if (!seen.insert(names_[i]).second)
      throw InvalidInputError("duplicate variable '" + names_[i] + "'");
    if (weights_[i] < 1)
      throw InvalidInputError("degree must be positive (variable '" + names_[i] + "')");
  }
}

PolyRing PolyRing::standard(Field field, std::vector<std::string> names, TermOrder order) {
  std::vector<std::uint32_t> weights(names.size(), 1);
  return PolyRing(field, std::move(names), std::move(weights), order);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

PolyRing PolyRing::with_order(TermOrder order) const {
  PolyRing r = *this;
  r.order_ = order;
  return r;
}

PolyRing PolyRing::extended(const std::string& name, std::uint32_t weight) const {
  auto names = names_;
  auto weights = weights_;
  names.push_back(name);
  weights.push_back(weight);
  return PolyRing(field_, std::move(names), std::move(weights), order_);
}

Polynomial PolyRing::embed(const Polynomial& f, std::size_t extra_vars) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::vector<Exponent> e(t.mono.exponents().begin(), t.mono.exponents().end());
    e.resize(e.size() + extra_vars, 0);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  // Appending trailing zero exponents preserves relative order under both
  // supported orders, so the term list stays sorted.
  return Polynomial(std::move(terms));
}

std::uint64_t PolyRing::weighted_degree(const Monomial& m) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += std::uint64_t{weights_[i]} * m[i];
  return d;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (order_ == TermOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  std::uint64_t da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Polynomial PolyRing::constant(const Rational& c) const {
  Rational v = field_.from_rational(c);
  if (v.is_zero()) return {};
  return Polynomial({{v, Monomial(nvars())}});
}

Polynomial PolyRing::variable(std::size_t index) const {
  return Polynomial({{Rational(1), Monomial::variable(nvars(), index)}});
}

Polynomial PolyRing::monomial(const Monomial& m, const Rational& c) const {
  Rational v = field_.from_rational(c);
  if (v.is_zero()) return {};
  return Polynomial({{v, m}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  for (Term& t : terms) t.coeff = field_.from_rational(t.coeff);
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto i = f.terms_.begin(), j = g.terms_.begin();
  while (i != f.terms_.end() && j != g.terms_.end()) {
    int c = compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Rational s = field_.add(i->coeff, j->coeff);
      if (!s.is_zero()) out.push_back({std::move(s), i->mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, f.terms_.end());
  out.insert(out.end(), j, g.terms_.end());
  return Polynomial(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  Polynomial r = f;
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial PolyRing::scale(const Polynomial& f, const Rational& c) const {
  Rational v = field_.from_rational(c);
  if (v.is_zero()) return {};
  Polynomial r = f;
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, v);
  return r;
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Rational& c, const Monomial& m) const {
  Rational v = field_.from_rational(c);
  if (v.is_zero()) return {};
  Polynomial r = f;
  for (Term& t : r.terms_) {
    t.coeff = field_.mul(t.coeff, v);
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const Term& a : f.terms_)
    for (const Term& b : g.terms_) terms.push_back({field_.mul(a.coeff, b.coeff), a.mono * b.mono});
  return from_terms(std::move(terms));
}

Polynomial PolyRing::pow(const Polynomial& f, unsigned n) const {
  Polynomial result = one();
  for (unsigned i = 0; i < n; ++i) result = mul(result, f);
  return result;
}

Polynomial PolyRing::make_monic(const Polynomial& f) const {
  if (f.is_zero() || f.leading_coefficient().is_one()) return f;
  return scale(f, field_.inv(f.leading_coefficient()));
}

Polynomial PolyRing::derivative(const Polynomial& f, std::size_t index) const {
  std::vector<Term> terms;
  for (const Term& t : f.terms_) {
    Exponent e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m[index] = e - 1;
    terms.push_back({field_.mul(t.coeff, field_.from_integer(static_cast<long>(e))), std::move(m)});
  }
  return from_terms(std::move(terms));
}

std::optional<std::uint64_t> PolyRing::homogeneous_degree(const Polynomial& f) const {
  if (f.is_zero()) return 0;
  std::uint64_t d = weighted_degree(f.leading_monomial());
  for (const Term& t : f.terms_)
    if (weighted_degree(t.mono) != d) return std::nullopt;
  return d;
}

std::uint64_t PolyRing::max_total_degree(const Polynomial& f) const {
  std::uint64_t d = 0;
  for (const Term& t : f.terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms_) {
    Rational c = field_.display(t.coeff);
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (!c.is_one()) os << c << '*';
      os << format(t.mono);
    }
  }
  return os.str();
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Field& k = ring.field();
  Polynomial a = ring.mul_term(f, k.inv(f.leading_coefficient()), l / f.leading_monomial());
  Polynomial b = ring.mul_term(g, k.inv(g.leading_coefficient()), l / g.leading_monomial());
  return ring.sub(a, b);
}

}  // namespace grlab
