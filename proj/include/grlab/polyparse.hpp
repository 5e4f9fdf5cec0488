#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grlab/polyring.hpp"

namespace grlab {

/// Polynomial grammar:
///   expr        := ['-'] term (('+'|'-') term)*
///   term        := factor ('*' factor)*
///   factor      := coefficient | variable ['^' natural] | '(' expr ')'
///   coefficient := integer ['/' positive-integer]
/// Multiplication must be explicit. Whitespace is ignored between tokens.
/// Throws ParseError (with byte offset) on syntax errors, unknown variables
/// and exponents above 2^31.
Polynomial parse_polynomial(std::string_view src, const PolyRing& ring);

struct VariableDecl {
  std::string name;
  std::uint32_t degree = 1;
};

struct RingOptions {
  TermOrder order = TermOrder::WeightedGrevlex;
  bool assume_equidimensional = true;
};

/// A ring-definition file after structural validation; ideal strings are left
/// unparsed.
struct RingDefinitionDocument {
  FieldSpec field;
  std::vector<VariableDecl> variables;
  std::vector<std::string> ideal;
  RingOptions options;

  PolyRing make_ring() const;
  /// Parses every ideal string in make_ring(); zero polynomials are kept.
  std::vector<Polynomial> parse_ideal(const PolyRing& ring) const;
};

/// Reads the JSON ring-definition format:
///   {"field": {"kind": "rational"} | {"kind": "prime", "p": 32003},
///    "variables": [{"name": "x", "degree": 1}, ...],
///    "ideal": ["x*y - z^2", ...],
///    "options": {"order": "grevlex" | "lex", "assume_equidimensional": true}}
/// Malformed documents raise ParseError; a nonpositive degree, a duplicate or
/// invalid variable name, or a composite modulus raise InvalidInputError.
RingDefinitionDocument parse_ring_file(std::string_view src);

TermOrder parse_term_order(const std::string& name);

}  // namespace grlab
