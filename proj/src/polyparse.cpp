#include "grlab/polyparse.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

namespace grlab {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view src, const PolyRing& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial f = term();
    if (negate) f = ring_.neg(f);
    for (;;) {
      if (accept('+')) {
        f = ring_.add(f, term());
      } else if (accept('-')) {
        f = ring_.sub(f, term());
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = ring_.mul(f, factor());
    return f;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a coefficient, variable or '('");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.constant(coefficient());
    if (std::isalpha(static_cast<unsigned char>(c))) return power();
    fail("expected a coefficient, variable or '('");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Rational coefficient() {
    BigInt num(digits(), 10);
    if (!accept('/')) return Rational(num);
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a positive integer denominator");
    std::size_t at = pos_;
    BigInt den(digits(), 10);
    if (den == 0) throw ParseError("syntax error: denominator must be positive", at);
    return Rational::normalize(num, den);
  }

  Polynomial power() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    auto index = ring_.index_of(name);
    if (!index) throw ParseError("unknown variable '" + name + "'", start);
    Exponent e = 1;
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      std::string d = digits();
      if (d.empty()) fail("expected a natural exponent");
      BigInt value(d, 10);
      if (value > BigInt(std::uint64_t{1} << 31)) throw ParseError("exponent overflow", at);
      e = static_cast<Exponent>(value.get_ui());
    }
    return ring_.monomial(Monomial::variable(ring_.nvars(), *index, e));
  }

  std::string_view src_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

using nlohmann::json;

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("ring file: missing field '") + key + "'");
  return *it;
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const PolyRing& ring) {
  return PolynomialParser(src, ring).parse();
}

TermOrder parse_term_order(const std::string& name) {
  if (name == "grevlex") return TermOrder::WeightedGrevlex;
  if (name == "lex") return TermOrder::Lex;
  throw ParseError("unknown term order '" + name + "'");
}

RingDefinitionDocument parse_ring_file(std::string_view src) {
  json doc;
  try {
    doc = json::parse(src);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("ring file: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("ring file: top level must be an object");

  RingDefinitionDocument out;
  try {
    const json& field = require(doc, "field");
    const std::string kind = require(field, "kind").get<std::string>();
    if (kind == "rational") {
      out.field = FieldSpec::rational();
    } else if (kind == "prime") {
      const json& p = require(field, "p");
      if (!p.is_number_integer() || p.get<std::int64_t>() < 0)
        throw InvalidInputError("field modulus must be a prime below 2^31");
      out.field = FieldSpec::prime(p.get<std::uint64_t>());
    } else {
      throw ParseError("ring file: unknown field kind '" + kind + "'");
    }

    const json& vars = require(doc, "variables");
    if (!vars.is_array()) throw ParseError("ring file: 'variables' must be an array");
    std::set<std::string> seen;
    for (const json& v : vars) {
      VariableDecl decl;
      decl.name = require(v, "name").get<std::string>();
      const json& degree = require(v, "degree");
      if (!degree.is_number_integer()) throw ParseError("ring file: degree of '" + decl.name + "' must be an integer");
      if (degree.get<std::int64_t>() <= 0) throw InvalidInputError("degree must be positive (variable '" + decl.name + "')");
      if (degree.get<std::int64_t>() > (std::int64_t{1} << 31))
        throw InvalidInputError("degree of '" + decl.name + "' is too large");
      decl.degree = degree.get<std::uint32_t>();
      if (!seen.insert(decl.name).second) throw InvalidInputError("duplicate variable '" + decl.name + "'");
      out.variables.push_back(std::move(decl));
    }

    const json& ideal = require(doc, "ideal");
    if (!ideal.is_array()) throw ParseError("ring file: 'ideal' must be an array");
    for (const json& g : ideal) out.ideal.push_back(g.get<std::string>());

    if (auto it = doc.find("options"); it != doc.end()) {
      if (!it->is_object()) throw ParseError("ring file: 'options' must be an object");
      if (auto o = it->find("order"); o != it->end()) out.options.order = parse_term_order(o->get<std::string>());
      if (auto e = it->find("assume_equidimensional"); e != it->end())
        out.options.assume_equidimensional = e->get<bool>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("ring file: ") + e.what());
  }

  // Validates names; PolyRing throws InvalidInputError on bad identifiers.
  (void)out.make_ring();
  return out;
}

PolyRing RingDefinitionDocument::make_ring() const {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (const auto& v : variables) {
    names.push_back(v.name);
    weights.push_back(v.degree);
  }
  return PolyRing(Field(field), std::move(names), std::move(weights), options.order);
}

std::vector<Polynomial> RingDefinitionDocument::parse_ideal(const PolyRing& ring) const {
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const auto& src : ideal) gens.push_back(parse_polynomial(src, ring));
  return gens;
}

}  // namespace grlab
