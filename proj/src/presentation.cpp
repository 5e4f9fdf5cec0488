#include "grlab/presentation.hpp"

namespace grlab {

GradedRingPresentation GradedRingPresentation::create(PolyRing ring, std::vector<Polynomial> generators,
                                                      const Budget& budget) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Polynomial& g = generators[i];
    if (!ring.is_homogeneous(g))
      throw InvalidInputError("generator " + std::to_string(i + 1) + " is not homogeneous: " + ring.format(g));
  }
  Ideal ideal(std::move(ring), std::move(generators));
  if (ideal.is_unit(budget)) throw InvalidInputError("the ideal is not proper (it contains 1)");
  return GradedRingPresentation(std::move(ideal));
}

MonomialIdeal GradedRingPresentation::leading_ideal() const {
  return MonomialIdeal(nvars(), basis().leading_monomials());
}

}  // namespace grlab
