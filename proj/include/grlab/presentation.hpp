#pragma once

#include <vector>

#include "grlab/groebner.hpp"
#include "grlab/monomial_ideal.hpp"

namespace grlab {

/// A = k[x1..xn]/I with positive weights and homogeneous generators of a
/// proper ideal I; m = A_+ is the unique maximal graded ideal.
class GradedRingPresentation {
 public:
  /// Drops zero generators. Throws InvalidInputError when a generator is not
  /// homogeneous or I = (1).
  static GradedRingPresentation create(PolyRing ring, std::vector<Polynomial> generators,
                                       const Budget& budget = Budget());

  const PolyRing& ring() const { return ideal_.ring(); }
  std::size_t nvars() const { return ring().nvars(); }
  const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& basis() const { return ideal_.basis(); }

  /// Leading-term ideal of I.
  MonomialIdeal leading_ideal() const;
  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const { return normal_form(ring(), f, basis()); }

 private:
  explicit GradedRingPresentation(Ideal ideal) : ideal_(std::move(ideal)) {}

  Ideal ideal_;
};

}  // namespace grlab
