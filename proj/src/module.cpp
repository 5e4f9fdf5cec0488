#include "grlab/module.hpp"

#include <algorithm>

namespace grlab {

FreeModule::FreeModule(PolyRing ring, std::vector<std::uint64_t> shifts, std::vector<std::uint32_t> blocks)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(shifts_.size(), 0);
  if (blocks_.size() != shifts_.size()) throw InvalidInputError("module blocks and shifts differ in length");
}

int FreeModule::compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
  if (blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? 1 : -1;
  if (ring_.order() == TermOrder::WeightedGrevlex) {
    std::uint64_t da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  } else if (int c = ring_.compare(a, b); c != 0) {
    return c;
  }
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModuleVector FreeModule::from_terms(std::vector<VectorTerm> terms) const {
  const Field& k = ring_.field();
  for (auto& t : terms) t.coeff = k.from_rational(t.coeff);
  std::sort(terms.begin(), terms.end(), [this](const VectorTerm& a, const VectorTerm& b) { return compare(a, b) > 0; });
  ModuleVector out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono && out.terms.back().comp == t.comp) {
      out.terms.back().coeff = k.add(out.terms.back().coeff, t.coeff);
    } else {
      if (!out.terms.empty() && out.terms.back().coeff.is_zero()) out.terms.pop_back();
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && out.terms.back().coeff.is_zero()) out.terms.pop_back();
  return out;
}

ModuleVector FreeModule::from_polynomial(const Polynomial& f, std::uint32_t comp) const {
  std::vector<VectorTerm> terms;
  for (const Term& t : f.terms()) terms.push_back({t.coeff, t.mono, comp});
  return from_terms(std::move(terms));
}

ModuleVector FreeModule::from_components(std::span<const Polynomial> entries) const {
  std::vector<VectorTerm> terms;
  for (std::uint32_t c = 0; c < entries.size(); ++c)
    for (const Term& t : entries[c].terms()) terms.push_back({t.coeff, t.mono, c});
  return from_terms(std::move(terms));
}

Polynomial FreeModule::component(const ModuleVector& v, std::uint32_t comp) const {
  std::vector<Term> terms;
  for (const auto& t : v.terms)
    if (t.comp == comp) terms.push_back({t.coeff, t.mono});
  return ring_.from_terms(std::move(terms));
}

std::vector<Polynomial> FreeModule::components(const ModuleVector& v) const {
  std::vector<std::vector<Term>> parts(rank());
  for (const auto& t : v.terms) parts[t.comp].push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (auto& p : parts) out.push_back(ring_.from_terms(std::move(p)));
  return out;
}

ModuleVector FreeModule::add(const ModuleVector& a, const ModuleVector& b) const {
  const Field& k = ring_.field();
  ModuleVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  auto i = a.terms.begin(), j = b.terms.begin();
  while (i != a.terms.end() && j != b.terms.end()) {
    int c = compare(*i, *j);
    if (c > 0) {
      out.terms.push_back(*i++);
    } else if (c < 0) {
      out.terms.push_back(*j++);
    } else {
      Rational s = k.add(i->coeff, j->coeff);
      if (!s.is_zero()) out.terms.push_back({std::move(s), i->mono, i->comp});
      ++i;
      ++j;
    }
  }
  out.terms.insert(out.terms.end(), i, a.terms.end());
  out.terms.insert(out.terms.end(), j, b.terms.end());
  return out;
}

ModuleVector FreeModule::sub(const ModuleVector& a, const ModuleVector& b) const {
  return add(a, scale(b, Rational(-1)));
}

ModuleVector FreeModule::scale(const ModuleVector& a, const Rational& c) const {
  const Field& k = ring_.field();
  Rational v = k.from_rational(c);
  if (v.is_zero()) return {};
  ModuleVector out = a;
  for (auto& t : out.terms) t.coeff = k.mul(t.coeff, v);
  return out;
}

ModuleVector FreeModule::mul_term(const ModuleVector& a, const Rational& c, const Monomial& m) const {
  ModuleVector out = scale(a, c);
  for (auto& t : out.terms) t.mono = t.mono * m;
  return out;
}

ModuleVector FreeModule::mul_poly(const ModuleVector& a, const Polynomial& f) const {
  std::vector<VectorTerm> terms;
  const Field& k = ring_.field();
  for (const auto& t : a.terms)
    for (const Term& s : f.terms()) terms.push_back({k.mul(t.coeff, s.coeff), t.mono * s.mono, t.comp});
  return from_terms(std::move(terms));
}

ModuleVector FreeModule::make_monic(const ModuleVector& a) const {
  if (a.is_zero() || a.leading_term().coeff.is_one()) return a;
  return scale(a, ring_.field().inv(a.leading_term().coeff));
}

std::optional<std::uint64_t> FreeModule::homogeneous_degree(const ModuleVector& v) const {
  if (v.is_zero()) return 0;
  std::uint64_t d = degree(v.terms.front().mono, v.terms.front().comp);
  for (const auto& t : v.terms)
    if (degree(t.mono, t.comp) != d) return std::nullopt;
  return d;
}

std::string FreeModule::format(const ModuleVector& v) const {
  auto parts = components(v);
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += ring_.format(parts[i]);
  }
  return out + ")";
}

}  // namespace grlab
