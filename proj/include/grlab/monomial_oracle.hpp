#pragma once

#include <vector>

#include "grlab/monomial_ideal.hpp"

namespace grlab {

// Combinatorial checks for monomial quotients. Coordinate primes do not
// exhaust the graded primes of R/M (e.g. (x - y)), so these results decide
// isolatedness only for pure squarefree M, where the singular locus is a union
// of coordinate subspaces.

/// Prime (x_i : i in variables), variables ascending.
struct CoordinatePrime {
  std::vector<std::size_t> variables;

  friend bool operator==(const CoordinatePrime&, const CoordinatePrime&) = default;
};

inline constexpr std::size_t kMaxOracleVariables = 16;

/// Every coordinate prime containing M, ordered by size then lexicographically.
/// Throws ResourceCapError for more than 16 variables, InvalidInputError for
/// M = (1).
std::vector<CoordinatePrime> coordinate_primes_containing(const MonomialIdeal& ideal);

/// M localized at p: variables outside p become units and are stripped.
MonomialIdeal localize_monomial(const MonomialIdeal& ideal, const CoordinatePrime& prime);

/// True iff the localized ideal is generated by variables.
bool is_localization_regular(const MonomialIdeal& ideal, const CoordinatePrime& prime);

/// Maximal faces of the Stanley-Reisner complex, each ascending.
struct FacetComplex {
  std::vector<std::vector<std::size_t>> facets;
};

/// Requires squarefree, proper M.
FacetComplex facets(const MonomialIdeal& ideal);

/// Facets pairwise disjoint. Throws InvalidInputError on a non-pure complex.
bool sr_isolated(const FacetComplex& complex);

}  // namespace grlab
