#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grlab/monomial_ideal.hpp"
#include "grlab/presentation.hpp"

namespace grlab {

/// Integer polynomial in t, coefficient i belongs to t^i. Trailing zeros are
/// trimmed; the zero polynomial is empty.
using IntPoly = std::vector<std::int64_t>;

/// numerator(t) / prod (1 - t^w_i).
struct HilbertSeries {
  IntPoly numerator;
  std::vector<std::uint32_t> denominator_weights;

  /// dim_k A_d for d = 0..max_degree.
  std::vector<std::int64_t> coefficients(std::size_t max_degree) const;
  /// Order of the pole at t = 1; -1 for the zero series.
  int pole_order() const;
  /// The series as a polynomial when it has no pole at t = 1.
  std::optional<IntPoly> as_polynomial() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
};

/// Numerator of the Hilbert series of R/M for the given variable weights.
/// Throws ResourceCapError on coefficient overflow or when the budget runs out.
IntPoly hilbert_numerator(const MonomialIdeal& ideal, const std::vector<std::uint32_t>& weights,
                          const Budget& budget = Budget());

HilbertSeries hilbert_series(const GradedRingPresentation& a, const Budget& budget = Budget());

/// grKdim A, from the leading-term ideal.
int krull_dim(const GradedRingPresentation& a);
/// Krull dimension of R/I for an arbitrary ideal (-1 for the unit ideal).
int krull_dim(const Ideal& ideal, const Budget& budget = Budget());

/// dim_k R/I; nullopt means infinite.
std::optional<std::uint64_t> vector_space_dimension(const Ideal& ideal, const Budget& budget = Budget());

/// chi(n) = l(A/Q^n) for all n >= threshold.
struct CharPoly {
  std::vector<Rational> coefficients;
  unsigned threshold = 1;

  int degree() const;
  Rational evaluate(const Rational& t) const;
  /// Factored over the rationals where possible, e.g. "t*(t+1)/2".
  std::string to_string() const;
};

/// Characteristic polynomial of the graded m-primary ideal Q of A, given by
/// polynomials of R. Throws InvalidInputError when Q is not graded, not in m
/// or not m-primary, ResourceCapError when no stable fit is found by n = 40.
CharPoly char_poly(const GradedRingPresentation& a, const std::vector<Polynomial>& q,
                   const Budget& budget = Budget());

/// Row-reduced linear parts of the ideal generators.
struct LinearPart {
  std::size_t rank = 0;
  /// Variables eliminated by the linear relations (one pivot per row).
  std::vector<std::size_t> pivot_variables;
  /// The remaining variables; their images span m/m^2.
  std::vector<std::size_t> free_variables;
};

LinearPart linear_part(const GradedRingPresentation& a);

/// rank_k m/m^2
std::size_t min_gens_rank(const GradedRingPresentation& a);

/// True iff A/J has finite length, J given by polynomials of R.
bool is_torsion_cyclic(const GradedRingPresentation& a, const std::vector<Polynomial>& j,
                       const Budget& budget = Budget());

}  // namespace grlab
